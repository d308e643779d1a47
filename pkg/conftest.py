# 使测试可以直接导入仓库根目录下的pyLatticeWorks

"""自定义异常类"""

class RankDeficiency(ValueError):
    """输入向量线性相关"""
class DegenerateForm(ValueError):
    """双线性型退化(行列式为零)"""
class NotEven(ValueError):
    """格不是偶格"""

class ZeroVector(ValueError):
    """对零向量无定义的运算"""
class NotPrimitive(ValueError):
    """要求本原向量, 但输入不是本原的"""
class LatticeMismatch(ValueError):
    """向量属于不同的格"""

class WitnessInvalid(ValueError):
    """Eichler判别法所需的U⊕U见证不成立"""
class NotIntegral(ArithmeticError):
    """有理矩阵不是整矩阵, 即对合无法整延拓"""
class NotIsotropic(ArithmeticError):
    """粘合子群不是迷向的, 得到的超格不是偶整格"""
class EnumerationCapExceeded(ValueError):
    """枚举规模超出上限"""

class InvalidTrace(ValueError):
    """迹t不是非辛对合可能取到的值"""
class InvalidClass(LookupError):
    """共轭类编号不在1~4之内, 或该类不具备所需的结构"""

class VerificationFailed(AssertionError):
    """某项具名校验未通过"""
class DocumentError(ValueError):
    """格文档(JSON)格式错误"""

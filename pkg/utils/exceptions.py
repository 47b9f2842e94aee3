"""
HNN Order Lab - Exceptions
Error types raised by the algebra modules and caught by the runner
"""

from typing import Optional, Tuple


class HnnLabError(Exception):
    """Base class for every error raised by the workbench"""


class AlphabetError(HnnLabError, ValueError):
    """Invalid generator names or words from different alphabets"""


class WordSyntaxError(HnnLabError, ValueError):
    """Word text that does not follow the word grammar"""

    def __init__(self, message: str, text: str = "", column: int = 0, line: int = 0):
        self.text = text
        self.column = column
        self.line = line
        where = f"line {line}, column {column}" if line else f"column {column}"
        super().__init__(f"{message} ({where}): {text!r}")


class SubgroupGraphError(HnnLabError, ValueError):
    """Invalid generator list for a subgroup graph"""


class NotAMemberError(HnnLabError, LookupError):
    """Element is not in the subgroup it was expressed against"""


class ModulusMismatchError(HnnLabError, ValueError):
    """Elements of Γₙ with different n were combined"""


class NonCommutingError(HnnLabError, ValueError):
    """Lattice generators that do not commute"""

    def __init__(self, pair: Tuple[int, int], message: Optional[str] = None):
        self.pair = pair
        super().__init__(message or f"generators {pair[0]} and {pair[1]} do not commute")


class LatticeError(HnnLabError, ValueError):
    """Generators outside the abelian part handled by the lattice oracle"""


class SizeMismatchError(HnnLabError, ValueError):
    """Unipotent matrices of different sizes were combined"""


class ExtensionMismatchError(HnnLabError, ValueError):
    """HNN words that belong to different extensions"""


class BrittonError(HnnLabError, RuntimeError):
    """A subgroup oracle contradicted itself during reduction"""


class ConeSearchError(HnnLabError, ValueError):
    """Invalid element list or malformed witness"""


class CertificationError(HnnLabError, RuntimeError):
    """A certificate construction failed its own checks"""


class ScenarioError(HnnLabError, ValueError):
    """Scenario file that cannot be loaded"""

    def __init__(self, message: str, path: str = "", line: int = 0, column: int = 0):
        self.path = path
        self.line = line
        self.column = column
        location = path or "<scenario>"
        if line:
            location += f":{line}:{column}"
        super().__init__(f"{location}: {message}")

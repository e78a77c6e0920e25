from .formatter import FORMATS, ResultFormatter

__all__ = ["FORMATS", "ResultFormatter"]

"""Direction-critical centrally symmetric allowable sequences."""
__version__ = "0.1.0"

"""Delta Lab - contact interactions in truncated oscillator bases"""

__version__ = "1.0.0"

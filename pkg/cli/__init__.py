"""Delta Lab CLI Package - command line front end for the numerical lab"""

from deltalab import __version__

__all__ = ["__version__"]

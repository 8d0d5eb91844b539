"""Top-level package for hopflab-py."""

__author__ = """Hopflab Developers"""
__email__ = 'hopflab@users.noreply.github.com'
__version__ = "0.3.0"

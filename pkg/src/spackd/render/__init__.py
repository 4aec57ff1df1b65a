"""
Renderers for colorings.
"""

from .matrix import MatrixRenderer, render_matrix

__all__ = ["MatrixRenderer", "render_matrix"]

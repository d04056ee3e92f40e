"""Numerical verification of isometric compact-group actions on round spheres.

The heavy lifting lives in the compiled extension; this package re-exports
its operations. The extension sits inside the package when installed and on
the top level when running against a plain CMake build tree.
"""

try:
    from . import _sphereq as _core
except ImportError:  # build-tree layout
    import _sphereq as _core

globals().update(
    {name: value for name, value in vars(_core).items() if not name.startswith("_")}
)

__all__ = sorted(
    name for name in vars(_core) if not name.startswith("_")
)

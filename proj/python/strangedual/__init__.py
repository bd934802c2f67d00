"""Exact transform and identity-verification engine for product abelian surfaces.

Thin wrapper over the compiled extension; all arithmetic is exact, so numeric
results cross the boundary as decimal strings.
"""

try:
    from ._strangedual import (  # type: ignore[attr-defined]
        catalog_ids,
        euler_char_line,
        half_dim,
        product_chi,
        run_catalog,
        smith,
        torsion_count,
        transform,
        verlinde_count,
    )
except ImportError:  # build-tree layout: extension sits next to the package
    from _strangedual import (  # type: ignore[no-redef]
        catalog_ids,
        euler_char_line,
        half_dim,
        product_chi,
        run_catalog,
        smith,
        torsion_count,
        transform,
        verlinde_count,
    )

__all__ = [
    "catalog_ids",
    "euler_char_line",
    "half_dim",
    "product_chi",
    "run_catalog",
    "smith",
    "torsion_count",
    "transform",
    "verlinde_count",
]

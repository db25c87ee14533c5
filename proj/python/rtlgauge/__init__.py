"""Python bindings for the rtlgauge core operations.

The compiled extension lives at rtlgauge._core when installed; during
in-tree development the build directory is added to PYTHONPATH and the
module is importable as a top-level `_core`.
"""

try:
    from rtlgauge._core import (
        attempt_hqi,
        classify_failure,
        count_dependency_edges,
        extract_code,
        judge_simulation,
        list_modules,
        normalize_complexity,
        resolve_top_module,
        spearman_rho,
        strip_attributes,
        strip_comments,
    )
except ImportError:  # in-tree: extension built next to the CLI
    from _core import (
        attempt_hqi,
        classify_failure,
        count_dependency_edges,
        extract_code,
        judge_simulation,
        list_modules,
        normalize_complexity,
        resolve_top_module,
        spearman_rho,
        strip_attributes,
        strip_comments,
    )

__all__ = [
    "attempt_hqi",
    "classify_failure",
    "count_dependency_edges",
    "extract_code",
    "judge_simulation",
    "list_modules",
    "normalize_complexity",
    "resolve_top_module",
    "spearman_rho",
    "strip_attributes",
    "strip_comments",
]

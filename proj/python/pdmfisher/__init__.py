"""Bound states, Fisher information and uncertainty products of the
solitonic position-dependent-mass system m(x) = m0 sech^2(ax) with
potential V(x) = -V0 csch^2(ax) on x > 0."""

try:
    from . import _pdmfisher as _impl  # installed layout
except ImportError:  # in-tree build: extension sits on sys.path
    import _pdmfisher as _impl

__all__ = []
for _name in dir(_impl):
    if not _name.startswith("_"):
        globals()[_name] = getattr(_impl, _name)
        __all__.append(_name)
del _impl, _name

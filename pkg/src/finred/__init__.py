"""Decision procedures for finitely-red two-colour streams."""

from .kernels import BACKEND
from .notions import Classification, DecSet, classify
from .stream import (
    B,
    R,
    Color,
    FunStream,
    ParseError,
    ShapeMismatch,
    UpStream,
    at,
    bisimilar,
    canonicalize,
    f2s_up,
    format_stream,
    parse_stream,
    s2f,
    suffix,
)
from .temporal import decide, minimal_bound

__version__ = "0.1.0"

"""Report serialization: a human-readable text form and a byte-stable
structured form."""
import json
from fractions import Fraction

from .errors import NotApplicable
from .values import Dim

SCHEMA_VERSION = 1


def jsonable(x):
    """Recursively convert report values to JSON-compatible data."""
    if isinstance(x, Dim):
        return x.to_json()
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, bool) or isinstance(x, int) or isinstance(x, str) \
            or x is None:
        return x
    return str(x)


def _scalar(x):
    return x is None or isinstance(x, (bool, int, str, Fraction, Dim))


def _fmt(x):
    if x is None:
        return "-"
    if isinstance(x, bool):
        return "yes" if x else "no"
    return str(x)


def _walk(x, depth, label, lines):
    pad = "  " * depth
    head = "" if label is None else "%s: " % label
    if _scalar(x):
        lines.append(pad + head + _fmt(x))
        return
    if isinstance(x, dict):
        if label is not None:
            lines.append(pad + "%s:" % label)
            depth += 1
        for k, v in x.items():
            _walk(v, depth, str(k), lines)
        return
    seq = list(x)
    if all(_scalar(v) for v in seq):
        lines.append(pad + head + "[" + ", ".join(_fmt(v) for v in seq) + "]")
        return
    if label is not None:
        lines.append(pad + "%s:" % label)
        depth += 1
    for i, v in enumerate(seq):
        _walk(v, depth, "(%d)" % i, lines)


def render_text(report):
    lines = []
    _walk(report, 0, None, lines)
    return "\n".join(lines) + "\n"


def emit_report(report, fmt="text"):
    """Serialized report as bytes; structured output is deterministic and
    carries the schema version."""
    if fmt == "structured":
        doc = {"schema_version": SCHEMA_VERSION}
        doc.update(jsonable(report))
        text = json.dumps(doc, sort_keys=True, indent=2,
                          separators=(",", ": ")) + "\n"
        return text.encode("utf-8")
    if fmt != "text":
        raise NotApplicable("format must be text or structured")
    return render_text(report).encode("utf-8")

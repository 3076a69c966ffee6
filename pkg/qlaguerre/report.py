"""Rendering of values, records and verification results as text, JSON or
CSV.

Everything here returns strings ending in a newline; the output is a pure
function of its input so that reports are byte-identical between runs.
"""

import collections
import csv
import io
import json

from .utils.bilaurent import DEFAULT_NAMES, BiLaurent
from .utils.rational import format_rational, is_rational
from .utils.xpoly import XPoly


def _json(data):
    return json.dumps(data, sort_keys=True) + "\n"


def value_to_json(value, names=DEFAULT_NAMES):
    """The JSON-ready form of a BiLaurent, XPoly or rational."""
    if isinstance(value, BiLaurent):
        return value.to_json_dict(names)
    if isinstance(value, XPoly):
        return {"x": [value_to_json(c, names) for c in value.coeffs]}
    if is_rational(value):
        return format_rational(value)
    raise TypeError("Cannot render %r" % (value, ))


def value_to_text(value, names=DEFAULT_NAMES):
    if isinstance(value, (BiLaurent, XPoly)):
        return value.to_text(names)
    return format_rational(value)


def format_value(value, fmt="text", names=DEFAULT_NAMES):
    """A single computed value.

    ``text`` is the canonical form, ``json`` the ``{"terms": [...]}`` schema
    (XPoly values list one such object per power of x, lowest first) and
    ``csv`` a one-column table headed ``value``.
    """
    if fmt == "json":
        return _json(value_to_json(value, names))
    if fmt == "csv":
        return rows_to_csv([("value", ), (value_to_text(value, names), )])
    return value_to_text(value, names) + "\n"


def format_record(record, fmt="text"):
    """An ordered mapping of plain fields, e.g. a bijection image."""
    record = collections.OrderedDict(record)
    if fmt == "json":
        return _json(record)
    if fmt == "csv":
        return rows_to_csv([tuple(record), tuple(record.values())])
    return "".join("%s: %s\n" % item for item in record.items())


def rows_to_csv(rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue()


def format_results(results, seed, fmt="text"):
    """Verification report, results already sorted.

    :param results: iterable of :py:class:`~qlaguerre.verifier.CheckResult`.
    """
    results = list(results)
    if fmt == "json":
        return _json([{"check": r.name, "status": r.status, "detail": r.detail}
                      for r in results])
    if fmt == "csv":
        return rows_to_csv([("check", "status", "detail")] +
                           [(r.name, r.status, r.detail) for r in results])

    lines = ["seed=%d" % seed]
    lines.extend("%s %s %s" % (r.name, r.detail, r.status) for r in results)
    return "\n".join(lines) + "\n"


def write_output(text, path=None, stream=None):
    """Write to ``path`` when given, otherwise to ``stream``."""
    if path is None:
        stream.write(text)
        return
    with open(path, "w") as f:
        f.write(text)

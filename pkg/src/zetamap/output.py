"""CSV / JSON writers shared by the command line subcommands.

Floats are printed with 17 significant digits so every binary64 value
survives a write/read cycle unchanged.
"""
import json
import math


def format_float(x):
    x = float(x)
    if math.isnan(x) or math.isinf(x):
        return repr(x)
    return "%.17g" % x


def _cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    if value is None:
        return ""
    return str(value)


def write_csv(fh, columns, rows, footer=None):
    """Header, comma separated rows, then ``# key=value`` footer lines."""
    fh.write(",".join(columns) + "\n")
    for row in rows:
        fh.write(",".join(_cell(v) for v in row) + "\n")
    for key, value in (footer or {}).items():
        if isinstance(value, (list, tuple)):
            value = " ".join(_cell(v) for v in value)
        fh.write("# %s=%s\n" % (key, _cell(value)))


def _json_value(value):
    if isinstance(value, float) and (math.isnan(value) or math.isinf(value)):
        return repr(value)
    return value


def write_json(fh, columns, rows, footer=None):
    doc = {
        "columns": list(columns),
        "rows": [dict(zip(columns, (_json_value(v) for v in row))) for row in rows],
    }
    if footer:
        doc["summary"] = {k: _json_value(v) for k, v in footer.items()}
    # repr-based float encoding in json is already round-trip exact
    json.dump(doc, fh, indent=1, sort_keys=False)
    fh.write("\n")


def write_table(fh, fmt, columns, rows, footer=None):
    if fmt == "json":
        write_json(fh, columns, rows, footer)
    else:
        write_csv(fh, columns, rows, footer)

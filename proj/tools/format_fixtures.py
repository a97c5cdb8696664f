"""Rewrite JSON fixtures in the canonical layout produced by the library."""

import json
import pathlib
import sys


def _flat(v):
    return all(not isinstance(e, (list, dict)) for e in v)


def _inline(v):
    if isinstance(v, dict):
        return False
    if not isinstance(v, list):
        return True
    if _flat(v):
        return True
    return all(isinstance(e, list) and len(e) <= 2 and _flat(e) for e in v)


def _write(v, indent):
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if _inline(v):
        return json.dumps(v, separators=(",", ":"), ensure_ascii=False)
    if isinstance(v, list):
        items = [inner + _write(e, indent + 1) for e in v]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    if not v:
        return "{}"
    items = [inner + json.dumps(k, ensure_ascii=False) + ": " + _write(e, indent + 1) for k, e in v.items()]
    return "{\n" + ",\n".join(items) + "\n" + pad + "}"


def dump(doc):
    return _write(doc, 0) + "\n"


def main(paths):
    for p in map(pathlib.Path, paths):
        p.write_text(dump(json.loads(p.read_text())))


if __name__ == "__main__":
    main(sys.argv[1:])

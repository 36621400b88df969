"""Line-oriented text format for quivers and involutions, plus vector literals.

Format::

    quiver <name>
    vertices <id> <id> ...
    arrow <id> <tail> <head>
    involution <name>
    vmap <x> <y>
    amap <a> <b>

'#' starts a comment, blank lines are ignored.  vmap/amap pairs may be listed
in either direction; fixed points may be listed as 'vmap x x' or omitted.
Vector literals are comma-separated 'vertex=value' assignments with omitted
vertices defaulting to 0.
"""

from .errors import QuiverFileSyntaxError
from .quiver import DimVector, Involution, Quiver, Weight, validate_involution


def parse_quiver_file(text):
    """Parse a quiver file into (Quiver, list of validated Involutions)."""
    name = None
    vertices = []
    arrows = []
    inv_blocks = []  # (name, vmap pairs, amap pairs)
    current = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        kw, args = fields[0], fields[1:]
        if kw == "quiver":
            if len(args) != 1:
                raise QuiverFileSyntaxError(line_no, "expected: quiver <name>")
            if name is not None:
                raise QuiverFileSyntaxError(line_no, "duplicate quiver line")
            name = args[0]
        elif kw == "vertices":
            if not args:
                raise QuiverFileSyntaxError(line_no, "expected: vertices <id>...")
            vertices.extend(args)
        elif kw == "arrow":
            if len(args) != 3:
                raise QuiverFileSyntaxError(line_no, "expected: arrow <id> <tail> <head>")
            arrows.append(tuple(args))
        elif kw == "involution":
            if len(args) != 1:
                raise QuiverFileSyntaxError(line_no, "expected: involution <name>")
            current = (args[0], [], [])
            inv_blocks.append(current)
        elif kw in ("vmap", "amap"):
            if current is None:
                raise QuiverFileSyntaxError(line_no, f"{kw} outside an involution block")
            if len(args) != 2:
                raise QuiverFileSyntaxError(line_no, f"expected: {kw} <x> <y>")
            current[1 if kw == "vmap" else 2].append(tuple(args))
        else:
            raise QuiverFileSyntaxError(line_no, f"unknown directive {kw!r}")
    if name is None:
        raise QuiverFileSyntaxError(0, "missing quiver line")
    q = Quiver(name, vertices, arrows)
    involutions = []
    for iname, vpairs, apairs in inv_blocks:
        vmap, amap = {}, {}
        for x, y in vpairs:
            if x != y:
                vmap[x] = y
                vmap[y] = x
        for a, b in apairs:
            if a != b:
                amap[a] = b
                amap[b] = a
        inv = Involution(iname, vmap, amap)
        validate_involution(q, inv)
        involutions.append(inv)
    return q, involutions


def serialize_quiver(q, involutions=()):
    """Deterministic textual form; parse(serialize(...)) is the identity."""
    lines = [f"quiver {q.name}", "vertices " + " ".join(q.vertices)]
    for a, t, h in q.arrows:
        lines.append(f"arrow {a} {t} {h}")
    for inv in involutions:
        lines.append(f"involution {inv.name}")
        done = set()
        for v in q.vertices:
            w = inv.vertex(v)
            if w != v and v not in done:
                lines.append(f"vmap {v} {w}")
                done.update((v, w))
        done = set()
        for a in q.arrow_ids:
            b = inv.arrow(a)
            if b != a and a not in done:
                lines.append(f"amap {a} {b}")
                done.update((a, b))
    return "\n".join(lines) + "\n"


def _parse_assignments(q, text):
    entries = {}
    text = text.strip()
    if not text:
        return entries
    for item in text.split(","):
        if "=" not in item:
            raise ValueError(f"bad assignment {item!r}; expected vertex=value")
        v, val = item.split("=", 1)
        v = v.strip()
        if v not in set(q.vertices):
            raise ValueError(f"unknown vertex {v!r}")
        if v in entries:
            raise ValueError(f"vertex {v!r} assigned twice")
        entries[v] = int(val)
    return entries


def parse_dim_vector(q, text):
    return DimVector.from_dict(q, _parse_assignments(q, text))


def parse_weight(q, text):
    return Weight.from_dict(q, _parse_assignments(q, text))


def format_vector(vec):
    """Canonical literal: nonzero entries in vertex order."""
    items = [f"{v}={vec[v]}" for v in vec.quiver.vertices if vec[v]]
    return ",".join(items) if items else "0"

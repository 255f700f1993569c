"""Instance and solution file formats, plus OFF mesh export.

Instance grammar (``#`` starts a comment, tokens are whitespace separated)::

    problem vlp
    dims 3 2 2 2        # pp: k n p    vlp: m n q r    molp: m n q
    A
    1 0
    1 -1
    1 1
    b
    0
    -1
    -1
    P
    ...

Every matrix section is followed by exactly its declared number of rows; a
vector section has one entry per line.  A section with zero rows or zero
columns has no row lines.
"""
import json
import re
from functools import cmp_to_key

from .errors import InputError
from .numerics import Rational, dot, format_rational, parse_rational, sub
from .polyhedra import VRep, canonicalize, v_to_h
from .problems import MOLPInstance, PPInstance, SolutionPair, UpperImage, VLPInstance

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")

DIMS = {"pp": ("k", "n", "p"), "vlp": ("m", "n", "q", "r"), "molp": ("m", "n", "q")}
# section -> (row count, column count or None for a vector), in file order
SHAPES = {
    "pp": {"G": ("k", "n"), "H": ("k", "p"), "h": ("k", None)},
    "vlp": {"A": ("m", "n"), "b": ("m", None), "P": ("q", "n"), "Z": ("q", "r")},
    "molp": {"A": ("m", "n"), "b": ("m", None), "P": ("q", "n")},
}


class ParseError(InputError):
    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line, self.column = line, column


class StructuralError(InputError):
    def __init__(self, message, section=None):
        super().__init__(f"section {section}: {message}" if section else message)
        self.section = section


def _lines(text):
    """Yield ``(lineno, [(column, token), ...])`` for non-blank lines."""
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        toks = [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", body)]
        if toks:
            yield no, toks


def _rational(tok, no, col):
    if not _RATIONAL.match(tok):
        raise ParseError(f"malformed rational {tok!r}", no, col)
    try:
        return parse_rational(tok)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"malformed rational {tok!r} ({e})", no, col)


def _count(tok, no, col):
    if not tok.isdigit():
        raise ParseError(f"expected a nonnegative integer, got {tok!r}", no, col)
    return int(tok)


def parse_instance(text: str):
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty instance", 1, 1)
    no, toks = lines[0]
    if toks[0][1] != "problem" or len(toks) != 2 or toks[1][1] not in DIMS:
        raise ParseError("expected 'problem pp|vlp|molp'", no, toks[0][0])
    kind = toks[1][1]
    if len(lines) < 2:
        raise ParseError("missing dims line", no + 1, 1)
    no, toks = lines[1]
    names = DIMS[kind]
    if toks[0][1] != "dims" or len(toks) != len(names) + 1:
        raise ParseError(f"expected 'dims {' '.join(names)}'", no, toks[0][0])
    dims = {nm: _count(t, no, c) for nm, (c, t) in zip(names, toks[1:])}
    shapes = SHAPES[kind]
    data = {}
    i = 2
    while i < len(lines):
        no, toks = lines[i]
        label = toks[0][1]
        if label not in shapes or len(toks) != 1:
            raise ParseError(f"expected a section label ({', '.join(shapes)}), got {label!r}",
                             no, toks[0][0])
        if label in data:
            raise StructuralError("appears twice", label)
        nrows, ncols = shapes[label]
        nrows = dims[nrows]
        width = 1 if ncols is None else dims[ncols]
        if width == 0:
            nrows = 0
        rows = []
        i += 1
        while len(rows) < nrows:
            if i >= len(lines) or (len(lines[i][1]) == 1 and lines[i][1][0][1] in shapes):
                raise StructuralError(f"expected {nrows} rows, got {len(rows)}", label)
            no, toks = lines[i]
            if len(toks) != width:
                raise StructuralError(f"row {len(rows) + 1} (line {no}) has {len(toks)} "
                                      f"entries, expected {width}", label)
            rows.append(tuple(_rational(t, no, c) for c, t in toks))
            i += 1
        if ncols is None:
            rows = [r[0] for r in rows]
        elif width == 0:
            rows = [()] * dims[shapes[label][0]]
        data[label] = tuple(rows)
    missing = [s for s in shapes if s not in data]
    if missing:
        raise StructuralError(f"missing section(s) {', '.join(missing)}")
    if kind == "pp":
        return PPInstance(data["G"], data["H"], data["h"], n=dims["n"], p=dims["p"])
    if kind == "vlp":
        return VLPInstance(data["A"], data["b"], data["P"], data["Z"])
    return MOLPInstance(data["A"], data["b"], data["P"])


def instance_kind(inst) -> str:
    if isinstance(inst, PPInstance):
        return "pp"
    if isinstance(inst, MOLPInstance):
        return "molp"
    if isinstance(inst, VLPInstance):
        return "vlp"
    raise TypeError(f"not an instance: {type(inst).__name__}")


def _row(v):
    return " ".join(format_rational(a) for a in v)


def format_instance(inst) -> str:
    kind = instance_kind(inst)
    if kind == "pp":
        dims = (inst.k, inst.n, inst.p)
        sections = {"G": inst.G, "H": inst.H, "h": inst.h}
    else:
        dims = (inst.m, inst.n, inst.q) + ((inst.r,) if kind == "vlp" else ())
        sections = {"A": inst.A, "b": inst.b, "P": inst.P}
        if kind == "vlp":
            sections["Z"] = inst.Z
    out = [f"problem {kind}", "dims " + " ".join(map(str, dims))]
    for label, rows in sections.items():
        out.append(label)
        for r in rows:
            if isinstance(r, Rational):
                out.append(format_rational(r))
            elif r:
                out.append(_row(r))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# solutions

CERTIFICATE_KIND = {"infeasible": "farkas", "no-solution": "lineality"}


def _outcome_fields(outcome):
    sol = outcome.solution
    ui = outcome.upper_image.vrep if outcome.upper_image is not None else None
    return sol, ui


def write_solution(outcome, fmt: str = "text") -> bytes:
    """Serialize a ``VLPOutcome``-like object (status, solution, upper_image,
    diagnostics, certificate)."""
    sol, ui = _outcome_fields(outcome)
    cert = outcome.certificate
    if fmt == "json":
        s = lambda v: [format_rational(a) for a in v]
        doc = {
            "status": outcome.status,
            "points": [{"x": s(x), "image": s(y)} for x, y in sol.points] if sol else [],
            "directions": [{"x": s(x), "image": s(y)} for x, y in sol.directions] if sol else [],
            "upper_image": None if ui is None else {
                "dim": ui.dim,
                "vertices": [s(p) for p in ui.points],
                "rays": [s(r) for r in ui.rays],
                "lineality": [s(l) for l in ui.lineality],
            },
            "diagnostics": outcome.diagnostics,
            "certificates": {} if cert is None else
            {CERTIFICATE_KIND.get(outcome.status, "certificate"): s(cert)},
        }
        return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode()
    if fmt != "text":
        raise InputError(f"unknown format {fmt!r}")
    out = [f"status {outcome.status}"]
    if sol is not None:
        for name, gens in (("points", sol.points), ("directions", sol.directions)):
            out.append(f"{name} {len(gens)}")
            out.extend(f"{_row(x)} | {_row(y)}" for x, y in gens)
    if ui is not None:
        out.append(f"upper_image {ui.dim}")
        for name, gens in (("vertices", ui.points), ("rays", ui.rays), ("lineality", ui.lineality)):
            out.append(f"{name} {len(gens)}")
            out.extend(_row(g) for g in gens)
    if cert is not None:
        out.append(f"certificate {CERTIFICATE_KIND.get(outcome.status, 'certificate')} {_row(cert)}")
    if outcome.diagnostics:
        out.append("diagnostics " + " ".join(outcome.diagnostics.split()))
    return ("\n".join(out) + "\n").encode()


def _upper_image(dim, pts, rays, lin):
    vrep = VRep(tuple(pts), tuple(rays), tuple(lin), dim)
    return UpperImage(vrep, v_to_h(vrep)) if pts else UpperImage(vrep, None)


def parse_solution(data):
    """Inverse of ``write_solution``; accepts either format."""
    from .reductions import VLPOutcome
    text = data.decode() if isinstance(data, bytes) else data
    if text.lstrip().startswith("{"):
        try:
            doc = json.loads(text)
            vec = lambda v: tuple(parse_rational(a) for a in v)
            pair = lambda gs: tuple((vec(g["x"]), vec(g["image"])) for g in gs)
            sol = SolutionPair(pair(doc["points"]), pair(doc["directions"])) \
                if doc["points"] or doc["directions"] else None
            ui = doc.get("upper_image")
            ui = None if ui is None else _upper_image(
                ui["dim"], map(vec, ui["vertices"]), map(vec, ui["rays"]), map(vec, ui["lineality"]))
            certs = doc.get("certificates") or {}
            cert = vec(next(iter(certs.values()))) if certs else None
            return VLPOutcome(doc["status"], sol, ui, doc.get("diagnostics", ""), cert)
        except (KeyError, TypeError, ValueError, AttributeError) as e:
            raise InputError(f"malformed JSON solution: {e}")
    lines = list(_lines(text))
    pos = 0

    def take(word):
        nonlocal pos
        if pos >= len(lines) or lines[pos][1][0][1] != word:
            no = lines[pos][0] if pos < len(lines) else len(text.splitlines()) + 1
            raise ParseError(f"expected {word!r}", no, 1)
        no, toks = lines[pos]
        pos += 1
        return no, toks[1:]

    def vec_of(no, toks):
        return tuple(_rational(t, no, c) for c, t in toks)

    def block(word, pairs):
        no, toks = take(word)
        count = _count(toks[0][1], no, toks[0][0]) if len(toks) == 1 else None
        if count is None:
            raise ParseError(f"expected '{word} <count>'", no, 1)
        nonlocal pos
        out = []
        for _ in range(count):
            if pos >= len(lines):
                raise StructuralError(f"expected {count} entries", word)
            no, toks = lines[pos]
            pos += 1
            if pairs:
                bars = [j for j, (_, t) in enumerate(toks) if t == "|"]
                if len(bars) != 1:
                    raise ParseError("expected 'x | image'", no, toks[0][0])
                j = bars[0]
                out.append((vec_of(no, toks[:j]), vec_of(no, toks[j + 1:])))
            else:
                out.append(vec_of(no, toks))
        return out

    no, toks = take("status")
    status = toks[0][1] if toks else ""
    sol = ui = cert = None
    diagnostics = ""
    if pos < len(lines) and lines[pos][1][0][1] == "points":
        sol = SolutionPair(tuple(block("points", True)), tuple(block("directions", True)))
    if pos < len(lines) and lines[pos][1][0][1] == "upper_image":
        no, toks = take("upper_image")
        dim = _count(toks[0][1], no, toks[0][0])
        ui = _upper_image(dim, block("vertices", False), block("rays", False), block("lineality", False))
    if pos < len(lines) and lines[pos][1][0][1] == "certificate":
        no, toks = take("certificate")
        cert = vec_of(no, toks[1:])
    if pos < len(lines) and lines[pos][1][0][1] == "diagnostics":
        no, _ = take("diagnostics")
        diagnostics = text.splitlines()[no - 1].split("#", 1)[0].split(None, 1)[1].strip()
    if pos < len(lines):
        no, toks = lines[pos]
        raise ParseError(f"unexpected {toks[0][1]!r}", no, toks[0][0])
    return VLPOutcome(status, sol, ui, diagnostics, cert)


# ---------------------------------------------------------------------------
# OFF mesh

def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _ccw(pts, normal):
    """Order coplanar ``pts`` counter-clockwise as seen from the tip of ``normal``."""
    c = tuple(sum(p[i] for p in pts) / len(pts) for i in range(3))
    u = sub(pts[0], c)
    w = _cross(normal, u)
    coords = [(dot(sub(p, c), u), dot(sub(p, c), w)) for p in pts]

    def half(a):
        return 0 if a[1] > 0 or (a[1] == 0 and a[0] > 0) else 1

    def cmp(i, j):
        a, b = coords[i], coords[j]
        ha, hb = half(a), half(b)
        if ha != hb:
            return ha - hb
        cr = a[0] * b[1] - a[1] * b[0]
        return -1 if cr > 0 else (1 if cr < 0 else 0)

    return sorted(range(len(pts)), key=cmp_to_key(cmp))


def write_mesh(vrep: VRep) -> bytes:
    """OFF file of a bounded 3-dimensional polytope; facets are listed
    counter-clockwise when seen from outside."""
    if vrep.dim != 3:
        raise InputError(f"mesh export needs a set in 3-space, got dimension {vrep.dim}")
    if vrep.is_empty or not vrep.is_bounded:
        raise InputError("mesh export needs a nonempty bounded set")
    V = canonicalize(vrep)
    pts = V.points
    H = v_to_h(V)
    faces = []
    eqs = [(a, b) for a, b in zip(H.M, H.rhs)]
    # equality pairs (a >= b, -a >= -b) mean the polytope is not full-dimensional
    pairs = {(a, b) for a, b in eqs}
    flat = any((tuple(-x for x in a), -b) in pairs for a, b in eqs)
    if flat or len(pts) < 4:
        raise InputError("mesh export needs a full-dimensional polytope")
    for a, b in eqs:
        idx = [i for i, p in enumerate(pts) if dot(a, p) == b]
        order = _ccw([pts[i] for i in idx], tuple(-x for x in a))
        faces.append([idx[j] for j in order])
    out = ["OFF", f"{len(pts)} {len(faces)} 0"]
    out.extend(_row(p) for p in pts)
    out.extend(f"{len(f)} " + " ".join(map(str, f)) for f in faces)
    return ("\n".join(out) + "\n").encode()

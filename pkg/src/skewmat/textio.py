"""Plain-text formats for matroids, signatures, coordinates and Ore matrices.

Every format is line based: ``key: value`` lines, with blank lines and
``#`` comments ignored.
"""

from skewmat.hmatroid import Signature, SignatureError
from skewmat.hyperfield import HyperfieldError, hyperfield_from_spec
from skewmat.matroid import Matroid, MatroidError, bits
from skewmat.ore import OreError, ore_ring, parse_ore


class FormatError(ValueError):
    pass


def _lines(text):
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise FormatError(f"line {n}: expected 'key: value', got {raw!r}")
        key, value = line.split(":", 1)
        yield n, key.strip().lower(), value.strip()


def read_text(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


# -- matroids -------------------------------------------------------------------


def parse_matroid(text, mode="full"):
    ground, bases, circuits = None, [], []
    for n, key, value in _lines(text):
        if key == "ground":
            ground = value.split()
        elif key == "basis":
            bases.append(value.split())
        elif key == "circuit":
            circuits.append(value.split())
        else:
            raise FormatError(f"line {n}: unknown key {key!r}")
    if ground is None:
        raise FormatError("missing 'ground:' line")
    if bases and circuits:
        raise FormatError("a matroid file lists bases or circuits, not both")
    if bases:
        return Matroid.from_bases(ground, bases)
    return Matroid.from_circuits(ground, circuits, mode)


def format_matroid(N, kind="basis"):
    out = ["ground: " + " ".join(N.ground)]
    family = sorted(N.bases, key=bits) if kind == "basis" else N.circuits
    out.extend(f"{kind}: " + " ".join(N.labels(m)) for m in family)
    return "\n".join(out) + "\n"


# -- signatures -----------------------------------------------------------------


def parse_signature(text, hf=None):
    """Read ``side``, ``hyperfield``, ``ground`` and ``circuit: v1;...;vn`` lines.

    ``hf`` supplies the hyperfield spec when the file has none; if both are
    given they must agree.
    """
    side, spec, ground, rows = "left", None, None, []
    for n, key, value in _lines(text):
        if key == "side":
            side = value.lower()
        elif key == "hyperfield":
            spec = value
        elif key == "ground":
            ground = value.split()
        elif key == "circuit":
            rows.append((n, value))
        else:
            raise FormatError(f"line {n}: unknown key {key!r}")
    if hf is not None and spec is not None and hf.strip().lower() != spec.strip().lower():
        raise FormatError(f"file hyperfield {spec!r} differs from --hf {hf!r}")
    spec = spec or hf
    if spec is None:
        raise FormatError("no hyperfield given")
    if ground is None:
        raise FormatError("missing 'ground:' line")
    if side not in ("left", "right"):
        raise FormatError(f"side must be left or right, not {side!r}")
    H = hyperfield_from_spec(spec)
    vectors = []
    for n, value in rows:
        entries = [e.strip() for e in value.split(";")]
        if len(entries) != len(ground):
            raise FormatError(f"line {n}: {len(entries)} entries for {len(ground)} elements")
        try:
            vectors.append(tuple(H.parse(e) for e in entries))
        except (HyperfieldError, ValueError) as exc:
            raise FormatError(f"line {n}: {exc}") from None
    return Signature(H, ground, vectors, side)


def format_signature(C):
    H = C.field
    out = [f"side: {C.side}", f"hyperfield: {H.spec}", "ground: " + " ".join(C.ground)]
    out.extend("circuit: " + "; ".join(H.format(x) for x in v) for v in C.vectors)
    return "\n".join(out) + "\n"


def format_vector(H, v):
    return "(" + ", ".join(H.format(x) for x in v) + ")"


def format_coordinates(cc):
    return "\n".join(cc.lines()) + "\n"


# -- Ore matrices ----------------------------------------------------------------


def parse_ore_matrix(text):
    """Header ``p``, ``k``, optional ``modulus`` and ``twist``, then ``row:`` lines.

    Rows are matrix rows; the vectors v_e are the columns.
    """
    p, k, modulus, twist, rows = None, 1, None, "frob", []
    for n, key, value in _lines(text):
        if key == "p":
            p = int(value)
        elif key == "k":
            k = int(value)
        elif key == "modulus":
            modulus = value
        elif key == "twist":
            twist = value.lower()
        elif key == "row":
            rows.append((n, value))
        else:
            raise FormatError(f"line {n}: unknown key {key!r}")
    if p is None:
        raise FormatError("missing 'p:' line")
    try:
        R = ore_ring(p, k, twist)
    except (HyperfieldError, OreError) as exc:
        raise FormatError(str(exc)) from None
    if modulus is not None:
        _check_modulus(R, modulus)
    matrix = []
    for n, value in rows:
        try:
            matrix.append([parse_ore(R, e.strip()) for e in value.split(";")])
        except OreError as exc:
            raise FormatError(f"line {n}: {exc}") from None
    if not matrix:
        raise FormatError("no 'row:' lines")
    if len({len(r) for r in matrix}) != 1:
        raise FormatError("rows of different lengths")
    return R, matrix


def _check_modulus(R, text):
    """The stated modulus must be the one the field tables are built from."""
    K = R.K
    mine = K.modulus
    t = text.replace(" ", "")
    coeffs = [0] * (K.k + 1)
    for sign, body in _signed_terms(t):
        if "g" in body:
            head, _, power = body.partition("g")
            exp = int(power[1:]) if power.startswith("^") else 1
            c = int(head.rstrip("*")) if head.rstrip("*") else 1
        else:
            exp, c = 0, int(body)
        if exp > K.k:
            raise FormatError(f"modulus {text!r} has degree above {K.k}")
        coeffs[exp] = (coeffs[exp] + sign * c) % K.p
    if coeffs != [c % K.p for c in mine]:
        raise FormatError(f"modulus {text!r} differs from the built-in modulus of GF({K.p}^{K.k})")


def _signed_terms(t):
    out, cur, sign = [], "", 1
    for ch in t:
        if ch in "+-":
            if cur:
                out.append((sign, cur))
            sign, cur = (-1 if ch == "-" else 1), ""
        else:
            cur += ch
    if cur:
        out.append((sign, cur))
    return out


def columns_of(matrix):
    return [[row[c] for row in matrix] for c in range(len(matrix[0]))]


ERRORS = (FormatError, HyperfieldError, MatroidError, SignatureError, OreError, OSError)

import re

from ..construct import BlockTree, CisParams
from ..core import SupportVector, VectorFamily
from ..errors import FormatError
from ..extract import ExtractionCertificate
from .rational import format_rational, parse_rational

FAMILY_TAG = "HWF 1"
PARAMS_TAG = "CISPARAMS 1"
CERT_TAG = "CERT 1"
MANIFEST_TAG = "MANIFEST 1"

_HEADER = re.compile(r"^n=(\d+) p=(\d+) m=(\d+)$")
_TREE_TOKEN = re.compile(r"\(|\)|\d+|\S")


def family_to_text(K: VectorFamily) -> str:
    lines = [FAMILY_TAG, f"n={K.dimension} p={K.weight} m={len(K)}"]
    lines.extend(" ".join(str(c) for c in v.support) for v in K)
    return "\n".join(lines) + "\n"


def family_from_text(text) -> VectorFamily:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) < 2 or lines[0] != FAMILY_TAG:
        raise FormatError(f"Family text must start with {FAMILY_TAG!r}")
    header = _HEADER.match(lines[1])
    if header is None:
        raise FormatError(f"Malformed family header {lines[1]!r}")
    n, p, m = (int(g) for g in header.groups())
    body = lines[2:]
    if len(body) != m:
        raise FormatError(f"Header announces m={m} vectors, found {len(body)} lines")
    vectors = []
    for lineno, line in enumerate(body, start=3):
        try:
            support = tuple(int(c) for c in line.split(" ")) if line else ()
            vectors.append(SupportVector(n, support))
        except ValueError as e:
            raise FormatError(f"Line {lineno}: {e}")
    try:
        return VectorFamily(n, p, vectors)
    except ValueError as e:
        raise FormatError(str(e))


def tree_to_text(tree: BlockTree) -> str:
    return _tree_expr(tree) + "\n"


def _tree_expr(node):
    if node.is_leaf:
        return str(node.leaf)
    return "(" + " ".join(_tree_expr(child) for child in node.children) + ")"


def tree_from_text(text) -> BlockTree:
    """
    Parse nested parenthesised index lists; a bare integer is a leaf and a
    node's level is one above its children's
    """
    tokens = _TREE_TOKEN.findall(text)
    if len(tokens) == 0:
        raise FormatError("Empty block tree")
    tree, pos = _parse_node(tokens, 0)
    if pos != len(tokens):
        raise FormatError(f"Unexpected trailing token {tokens[pos]!r} in block tree")
    return tree


def _parse_node(tokens, pos):
    if pos >= len(tokens):
        raise FormatError("Unexpected end of block tree")
    token = tokens[pos]
    if token.isdigit():
        return BlockTree(level=0, leaf=int(token)), pos + 1
    if token != "(":
        raise FormatError(f"Unexpected token {token!r} in block tree")
    children, pos = [], pos + 1
    while pos < len(tokens) and tokens[pos] != ")":
        child, pos = _parse_node(tokens, pos)
        children.append(child)
    if pos >= len(tokens):
        raise FormatError("Unbalanced parenthesis in block tree")
    if len(children) == 0:
        raise FormatError("Empty node in block tree")
    levels = {child.level for child in children}
    if len(levels) != 1:
        raise FormatError(f"Children of one node have different depths {sorted(levels)}")
    return BlockTree(level=levels.pop() + 1, children=tuple(children)), pos + 1


def _keyvalues_to_text(tag, items):
    return "\n".join([tag] + [f"{k}={v}" for k, v in items]) + "\n"


def _keyvalues_from_text(text, tag):
    lines = [line for line in text.split("\n") if line != ""]
    if len(lines) == 0 or lines[0] != tag:
        raise FormatError(f"Expected text starting with {tag!r}")
    values = {}
    for line in lines[1:]:
        key, sep, value = line.partition("=")
        if sep == "":
            raise FormatError(f"Malformed line {line!r}")
        values[key] = value
    return values


def params_to_text(params: CisParams) -> str:
    return _keyvalues_to_text(
        PARAMS_TAG,
        [
            ("t", params.t),
            ("a", params.a),
            ("p", params.p),
            ("q", params.q),
            ("n", params.n),
            ("alpha", format_rational(params.alpha)),
            ("C", format_rational(params.C)),
            ("lambda", format_rational(params.lam)),
        ],
    )


def params_from_text(text) -> CisParams:
    values = _keyvalues_from_text(text, PARAMS_TAG)
    try:
        return CisParams(
            t=int(values["t"]),
            a=int(values["a"]),
            p=int(values["p"]),
            q=int(values["q"]),
            n=int(values["n"]),
            alpha=parse_rational(values["alpha"]),
            C=parse_rational(values["C"]),
            lam=parse_rational(values["lambda"]),
        )
    except KeyError as e:
        raise FormatError(f"Missing parameter {e}")


def _indices(values):
    return " ".join(str(i) for i in values)


def certificate_to_text(cert: ExtractionCertificate) -> str:
    return _keyvalues_to_text(
        CERT_TAG,
        [
            ("kind", cert.kind),
            ("level", cert.level),
            ("center", "-" if cert.center is None else cert.center),
            ("C", format_rational(cert.C)),
            ("t", cert.t),
            ("threshold", "-" if cert.threshold is None else format_rational(cert.threshold)),
            ("chain_sizes", _indices(cert.chain_sizes)),
            ("subset", _indices(cert.subset)),
        ],
    )


def certificate_from_text(text) -> ExtractionCertificate:
    values = _keyvalues_from_text(text, CERT_TAG)
    try:
        return ExtractionCertificate(
            kind=values["kind"],
            level=int(values["level"]),
            C=parse_rational(values["C"]),
            t=int(values["t"]),
            chain_sizes=tuple(int(x) for x in values["chain_sizes"].split()),
            subset=tuple(int(x) for x in values["subset"].split()),
            center=None if values["center"] == "-" else int(values["center"]),
            threshold=None if values["threshold"] == "-" else parse_rational(values["threshold"]),
        )
    except KeyError as e:
        raise FormatError(f"Missing certificate field {e}")


def manifest_to_text(items) -> str:
    return _keyvalues_to_text(MANIFEST_TAG, items)


def manifest_from_text(text):
    return _keyvalues_from_text(text, MANIFEST_TAG)

import numpy as np

from ..core import VectorFamily, pairwise_distances
from .builder import BlockTree
from .checks import ExhaustiveCheck, StructuralCheck
from .counterexample import DEFAULT_MAX_SUBSETS
from .params import CisParams
from ..report import VerificationReport

COUNTEREXAMPLE_CHECKS = {
    "structural": StructuralCheck,
    "exhaustive": ExhaustiveCheck,
}


def check_tree_matches(family: VectorFamily, tree: BlockTree):
    """
    Raise ValueError unless the leaves of `tree` are exactly the family
    positions, each once
    """
    leaves = tree.leaves()
    if sorted(leaves) != list(range(len(family))):
        raise ValueError(
            f"Block tree does not span the family: {len(leaves)} leaves for {len(family)} vectors"
        )
    for path, node in tree.walk():
        for child in node.children:
            if child.level != node.level - 1:
                raise ValueError(f"Block tree level mismatch below node {path}")


def verify_cis(family: VectorFamily, tree: BlockTree, params: CisParams) -> VerificationReport:
    """
    Check every node of level i >= 1 against the block definition: it spans
    q^i vectors, its diameter is exactly 2p/a^(t-i), it has q children and
    all pairs across different children sit at exactly 2p/a^(t-i). The root
    must sit at level t unless the family is a single vector.
    Nodes that carry a frame (S, T) are also checked for the shared core:
    every vector they span is 1 on S, 0 outside T, and |S| = p - p/a^(t-i).
    """
    check_tree_matches(family, tree)
    report = VerificationReport(name="block structure")
    D = pairwise_distances(family)
    q = params.q

    report.checked += 1
    if tree.level != params.t and len(family) > 1:
        report.add((), "level", f"root at level {tree.level}, expected t = {params.t}")

    for path, node in tree.walk():
        span = node.leaves()
        if node.frame is not None:
            report.checked += 1
            _check_frame(report, path, node, span, family, params)
        if node.is_leaf:
            continue

        i = node.level
        if i > params.t:
            report.add(path, "level", f"node of level {i} above t = {params.t}")
            continue
        diameter = params.block_diameter(i)
        report.checked += 4
        if len(span) != q ** i:
            report.add(path, "size", f"level-{i} node spans {len(span)} vectors, expected {q ** i}")
        widest = int(D[np.ix_(span, span)].max()) if len(span) > 1 else 0
        if widest != diameter:
            report.add(path, "diameter", f"largest distance {widest}, expected {diameter}", span)
        if len(node.children) != q:
            report.add(path, "children", f"{len(node.children)} children, expected {q}")

        blocks = [child.leaves() for child in node.children]
        for r in range(len(blocks)):
            for s in range(r + 1, len(blocks)):
                sub = D[np.ix_(blocks[r], blocks[s])]
                bad = np.argwhere(sub != diameter)
                if len(bad) > 0:
                    x, y = blocks[r][bad[0][0]], blocks[s][bad[0][1]]
                    report.add(
                        path,
                        "cross",
                        f"children {r} and {s}: distance {int(D[x, y])}, expected {diameter}",
                        (int(x), int(y)),
                    )
    return report


def _check_frame(report, path, node, span, family, params):
    S, T = set(node.frame.S), set(node.frame.T)
    if node.level > params.t:
        return
    expected = params.core_size(node.level)
    if len(S) != expected:
        report.add(path, "frame", f"|S| = {len(S)}, expected {expected}")
    for idx in span:
        support = set(family[idx].support)
        if not S <= support or not support <= T:
            report.add(path, "frame", f"vector {idx} {family[idx]} is not between (S, T)", (idx,))


def verify_counterexample(
    family: VectorFamily,
    tree: BlockTree,
    params: CisParams,
    mode="structural",
    max_subsets=DEFAULT_MAX_SUBSETS,
) -> VerificationReport:
    """
    Confirm that every subset of more than q vectors has distance ratio at
    least a, either through the block structure or by enumerating all
    (q+1)-subsets. Reports the first violating subset, if any.
    """
    assert mode in COUNTEREXAMPLE_CHECKS, f"Mode must be one of {sorted(COUNTEREXAMPLE_CHECKS)}"
    if tree is not None:
        check_tree_matches(family, tree)
    check = COUNTEREXAMPLE_CHECKS[mode](family, params, tree=tree)
    return check.run(max_subsets=max_subsets)

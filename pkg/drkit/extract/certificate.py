from fractions import Fraction
from itertools import combinations

from ..core import VectorFamily, distance, distance_ratio
from ..report import VerificationReport
from .extractor import BALL, NET, ExtractionCertificate, _ball_positions, _magnitude, build_chain, extract_subset, threshold


def validate_certificate(K: VectorFamily, C, cert: ExtractionCertificate, K_sub: VectorFamily) -> VerificationReport:
    """
    Replay the deterministic chain for (K, C) and compare it with `cert`, then
    confirm independently that K_sub is the certified subset, that its ratio
    is at most C and that |K_sub|^t >= |K|.
    """
    C = Fraction(C)
    report = VerificationReport(name="certificate")
    try:
        _, expected = extract_subset(K, C)
    except ValueError as e:
        report.add((), "domain", str(e))
        return report

    report.checked += 1
    for name in ("kind", "level", "center", "t", "chain_sizes", "subset", "threshold"):
        if getattr(cert, name) != getattr(expected, name):
            found, replayed = _shown(getattr(cert, name)), _shown(getattr(expected, name))
            report.add((), "replay", f"{name} = {found}, replay gives {replayed}")

    report.checked += 1
    if any(not 0 <= j < len(K) for j in cert.subset) or len(set(cert.subset)) != len(cert.subset):
        report.add((), "subset", "certified indices are repeated or fall outside the input family")
        return report
    if K_sub != K.subset(cert.subset):
        report.add((), "subset", "output family differs from the certified indices")

    chain = build_chain(K, C)
    report.checked += 1
    if cert.kind == BALL:
        if not 1 <= cert.level < len(chain) or cert.center is None or not 0 <= cert.center < len(K):
            report.add((), "branch", f"ball at level {cert.level} has no matching chain level")
        else:
            radius = threshold(C, cert.level)
            members = _ball_positions(K, chain[cert.level - 1], cert.center, radius)
            if tuple(members) != tuple(cert.subset):
                report.add((), "branch", f"subset is not the ball of radius {_magnitude(radius)} around {cert.center}")
    elif cert.kind == NET:
        if cert.t > 1:
            theta = threshold(C, cert.t - 1)
            closest = _closest_pair(K, cert.subset)
            if closest is not None and closest[0] < theta:
                report.add((), "separation", f"pair at distance {closest[0]} below {_magnitude(theta)}", closest[1])
            endgame = Fraction(2 * K.weight) / C
            if closest is not None and closest[0] < endgame:
                report.add((), "endgame", f"minimum distance {closest[0]} below 2p/C = {endgame}")
    else:
        report.add((), "branch", f"unknown certificate kind {cert.kind!r}")

    report.checked += 2
    if len(K_sub) == 0:
        report.add((), "size", "empty output")
        return report
    ratio = distance_ratio(K_sub)
    if ratio > C:
        report.add((), "ratio", f"dr = {ratio} exceeds C = {C}")
    if len(K_sub) ** cert.t < len(K):
        report.add((), "size", f"|K'|^t = {len(K_sub)}^{cert.t} is below |K| = {len(K)}")
    return report


def _shown(value):
    return _magnitude(value) if isinstance(value, Fraction) else value


def _closest_pair(K, positions):
    best = None
    for x, y in combinations(positions, 2):
        d = distance(K[x], K[y])
        if best is None or d < best[0]:
            best = (d, (x, y))
    return best

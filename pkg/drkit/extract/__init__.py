from .extractor import (
    ExtractParams,
    ExtractionCertificate,
    compute_depth,
    threshold,
    greedy_separated,
    ball,
    build_chain,
    chain_coverage,
    extract_subset,
    BALL,
    NET,
)
from .certificate import validate_certificate

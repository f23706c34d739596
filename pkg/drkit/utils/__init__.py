from .rational import parse_rational, format_rational
from .formats import (
    family_to_text,
    family_from_text,
    tree_to_text,
    tree_from_text,
    params_to_text,
    params_from_text,
    certificate_to_text,
    certificate_from_text,
    manifest_to_text,
    manifest_from_text,
)
from .io import atomic_write_text, read_text, sha256_file, save_family, load_family

import hashlib
import os
from pathlib import Path

from .formats import family_from_text, family_to_text


def atomic_write_text(path, text):
    """
    Write to a sibling temporary file, then rename over `path`
    """
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    with tmp.open("w", encoding="utf-8", newline="\n") as f:
        f.write(text)
        f.flush()
        os.fsync(f.fileno())
    os.replace(str(tmp), str(path))


def read_text(path):
    with open(path, "r", encoding="utf-8", newline="") as f:
        return f.read()


def sha256_file(path):
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def save_family(path, K):
    atomic_write_text(path, family_to_text(K))


def load_family(path):
    return family_from_text(read_text(path))

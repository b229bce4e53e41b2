import hashlib
import os
import tempfile
from contextlib import contextmanager
from typing import Iterator


@contextmanager
def atomic_path(path: str) -> Iterator[str]:
    """
    Yields a temporary path in the same folder as `path`. The temporary file replaces `path` only
    when the block exits without an exception, so readers never see half written files.
    """
    directory = os.path.dirname(os.path.abspath(path))
    handle, temp_path = tempfile.mkstemp(prefix=".egokit-", suffix=".tmp", dir=directory)
    os.close(handle)
    try:
        yield temp_path
        os.replace(temp_path, path)
    finally:
        if os.path.exists(temp_path):
            os.remove(temp_path)


def atomic_write_text(path: str, text: str):
    with atomic_path(path) as temp_path:
        with open(temp_path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)


def file_digest(path: str) -> str:
    """sha256 of the file contents, used as data provenance in model files."""
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()

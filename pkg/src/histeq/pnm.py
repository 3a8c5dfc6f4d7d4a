"""Netpbm (PGM/PPM) codec.

Supports the four classic subformats: P2/P5 grayscale and P3/P6 RGB, with
maxval up to 65535 (two-byte big-endian samples in the binary formats).
Loading is strict: malformed headers and short payloads are rejected with
the byte offset of the fault, never padded or truncated.
"""

from __future__ import annotations

import numpy as np

from .exceptions import (
    MalformedHeader,
    SampleOutOfRange,
    TruncatedPayload,
    UnsupportedMaxval,
)
from .image import ColorImage, GrayImage

_WHITESPACE = b" \t\n\r\x0b\x0c"
GRAY_FORMATS = ("P2", "P5")
COLOR_FORMATS = ("P3", "P6")


class _Tokenizer:
    """Reads whitespace-separated tokens, skipping '#' comment lines."""

    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def skip_separators(self):
        data = self.data
        while self.pos < len(data):
            b = data[self.pos : self.pos + 1]
            if b in (b"#",):
                nl = data.find(b"\n", self.pos)
                self.pos = len(data) if nl < 0 else nl + 1
            elif b in _WHITESPACE:
                self.pos += 1
            else:
                return

    def next_token(self, what: str) -> tuple:
        self.skip_separators()
        if self.pos >= len(self.data):
            raise TruncatedPayload(f"expected {what}, found end of data", self.pos)
        start = self.pos
        while self.pos < len(self.data) and self.data[self.pos : self.pos + 1] not in _WHITESPACE:
            if self.data[self.pos : self.pos + 1] == b"#":
                break
            self.pos += 1
        return self.data[start : self.pos], start

    def next_int(self, what: str) -> tuple:
        token, start = self.next_token(what)
        if not token.isdigit():
            raise MalformedHeader(f"expected {what}, got {token!r}", start)
        return int(token), start


def _parse_header(tok: _Tokenizer) -> tuple:
    magic, start = tok.next_token("magic number")
    if magic not in (b"P2", b"P3", b"P5", b"P6"):
        raise MalformedHeader(f"unsupported magic {magic!r}", start)
    width, at = tok.next_int("width")
    if width == 0:
        raise MalformedHeader("width must be positive", at)
    height, at = tok.next_int("height")
    if height == 0:
        raise MalformedHeader("height must be positive", at)
    maxval, at = tok.next_int("maxval")
    if maxval == 0 or maxval > 65535:
        raise UnsupportedMaxval(f"maxval {maxval} outside [1, 65535]", at)
    return magic.decode("ascii"), width, height, maxval


def _read_ascii_samples(tok: _Tokenizer, count: int, maxval: int) -> np.ndarray:
    out = np.empty(count, dtype=np.int64)
    for i in range(count):
        value, at = tok.next_int("sample")
        if value > maxval:
            raise SampleOutOfRange(f"sample {value} exceeds maxval {maxval}", at)
        out[i] = value
    return out


def _read_binary_samples(data: bytes, pos: int, count: int, maxval: int) -> np.ndarray:
    # Exactly one whitespace byte separates maxval from the payload.
    if pos >= len(data) or data[pos : pos + 1] not in _WHITESPACE:
        raise MalformedHeader("missing whitespace before binary payload", pos)
    pos += 1
    width_bytes = 2 if maxval > 255 else 1
    needed = count * width_bytes
    if len(data) - pos < needed:
        raise TruncatedPayload(
            f"payload needs {needed} bytes, found {len(data) - pos}", len(data)
        )
    raw = data[pos : pos + needed]
    dtype = ">u2" if width_bytes == 2 else np.uint8
    samples = np.frombuffer(raw, dtype=dtype).astype(np.int64)
    bad = np.flatnonzero(samples > maxval)
    if bad.size:
        raise SampleOutOfRange(
            f"sample {int(samples[bad[0]])} exceeds maxval {maxval}",
            pos + int(bad[0]) * width_bytes,
        )
    return samples


def load_pnm(data: bytes) -> GrayImage | ColorImage:
    """Decode PGM/PPM bytes into a GrayImage or ColorImage (L = maxval + 1)."""
    tok = _Tokenizer(data)
    magic, width, height, maxval = _parse_header(tok)
    channels = 3 if magic in COLOR_FORMATS else 1
    count = width * height * channels
    if magic in ("P2", "P3"):
        samples = _read_ascii_samples(tok, count, maxval)
    else:
        samples = _read_binary_samples(data, tok.pos, count, maxval)
    levels = maxval + 1
    if channels == 1:
        return GrayImage(samples.reshape(height, width), levels)
    rgb = samples.reshape(height, width, 3)
    return ColorImage(
        GrayImage(rgb[:, :, 0], levels),
        GrayImage(rgb[:, :, 1], levels),
        GrayImage(rgb[:, :, 2], levels),
    )


def _ascii_body(samples: np.ndarray) -> bytes:
    lines = [" ".join(str(int(v)) for v in row) for row in samples]
    return ("\n".join(lines) + "\n").encode("ascii")


def save_pnm(img: GrayImage | ColorImage, fmt: str = "P5") -> bytes:
    """Encode an image; gray images need P2/P5, color images P3/P6."""
    if isinstance(img, GrayImage):
        if fmt not in GRAY_FORMATS:
            raise ValueError(f"grayscale images require P2 or P5, got {fmt}")
        flat = img.pixels.reshape(img.height, img.width)
        samples = flat
    elif isinstance(img, ColorImage):
        if fmt not in COLOR_FORMATS:
            raise ValueError(f"color images require P3 or P6, got {fmt}")
        samples = np.stack([p.pixels for p in img.planes], axis=-1).reshape(
            img.height, img.width * 3
        )
    else:
        raise TypeError("expected GrayImage or ColorImage")
    maxval = img.levels - 1
    header = f"{fmt}\n{img.width} {img.height}\n{maxval}\n".encode("ascii")
    if fmt in ("P2", "P3"):
        return header + _ascii_body(samples)
    dtype = ">u2" if maxval > 255 else np.uint8
    return header + samples.astype(dtype).tobytes()

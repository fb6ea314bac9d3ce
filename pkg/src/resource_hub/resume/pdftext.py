"""Minimal PDF text extraction for text-based PDFs.

Pulls the text-showing operators (Tj, ', ", TJ) out of page content
streams, decoding plain, Flate, and ASCII85+Flate stream filters. This
covers PDFs from the built-in renderer and common text-based resume PDFs
with simple (WinAnsi/Latin) encodings; image-only PDFs legitimately yield
no text. Kept intentionally independent of the render path: it works on
raw bytes only, so it can serve as the round-trip oracle for rendering.
"""

from __future__ import annotations

import base64
import re
import zlib

from ..errors import ValidationError


class UnreadablePdfError(ValidationError):
    code = "unreadable-pdf"


_STREAM_RE = re.compile(rb"<<(.*?)>>\s*stream\r?\n(.*?)(?:\r?\n)?endstream", re.S)
# (string) Tj  |  (string) '  |  (string) "  |  [ ... ] TJ
_SHOW_TEXT_RE = re.compile(rb"\((?:[^()\\]|\\.)*\)\s*(?:Tj|'|\")|\[(?:[^\]\\]|\\.)*\]\s*TJ", re.S)
_STRING_RE = re.compile(rb"\((?:[^()\\]|\\.)*\)", re.S)
_HEX_STRING_RE = re.compile(rb"<([0-9A-Fa-f\s]*)>\s*(?:Tj|'|\")")

_ESCAPES = {
    b"n": b"\n", b"r": b"\r", b"t": b"\t", b"b": b"\b", b"f": b"\f",
    b"(": b"(", b")": b")", b"\\": b"\\",
}


def _unescape(raw: bytes) -> bytes:
    out = bytearray()
    i = 0
    while i < len(raw):
        ch = raw[i : i + 1]
        if ch != b"\\":
            out += ch
            i += 1
            continue
        nxt = raw[i + 1 : i + 2]
        if nxt in _ESCAPES:
            out += _ESCAPES[nxt]
            i += 2
        elif nxt.isdigit():  # octal escape, up to 3 digits
            digits = raw[i + 1 : i + 4]
            j = 0
            while j < len(digits) and digits[j : j + 1].isdigit() and j < 3:
                j += 1
            out.append(int(digits[:j], 8) & 0xFF)
            i += 1 + j
        elif nxt in (b"\n", b"\r"):  # line continuation
            i += 2
        else:
            out += nxt
            i += 2
    return bytes(out)


def _decode_stream(header: bytes, body: bytes) -> bytes | None:
    filters = re.findall(rb"/([A-Za-z0-9]+Decode)", header)
    data = body
    try:
        for name in filters:
            if name == b"ASCII85Decode":
                text = data.strip()
                if text.endswith(b"~>"):
                    text = text[:-2]
                data = base64.a85decode(re.sub(rb"\s", b"", text))
            elif name == b"FlateDecode":
                data = zlib.decompress(data)
            else:
                return None  # unsupported filter (DCT, CCITT, ...): not text
    except (ValueError, zlib.error):
        return None
    return data


def _decode_text(raw: bytes) -> str:
    try:
        return raw.decode("cp1252")
    except UnicodeDecodeError:
        return raw.decode("latin-1", errors="replace")


def _extract_from_content(content: bytes) -> list[str]:
    pieces: list[str] = []
    for match in _SHOW_TEXT_RE.finditer(content):
        op = match.group(0)
        if op.rstrip().endswith(b"TJ"):
            # concatenate array strings directly; the numbers are kerning
            parts = [_unescape(s[1:-1]) for s in _STRING_RE.findall(op)]
            text = _decode_text(b"".join(parts))
        else:
            string = _STRING_RE.search(op)
            text = _decode_text(_unescape(string.group(0)[1:-1])) if string else ""
        if text:
            pieces.append(text)
    for match in _HEX_STRING_RE.finditer(content):
        digits = re.sub(rb"\s", b"", match.group(1))
        if len(digits) % 2:
            digits += b"0"
        pieces.append(_decode_text(bytes.fromhex(digits.decode("ascii"))))
    return pieces


def extract_text(pdf: bytes) -> str:
    """Extracted text, one piece per text-showing operator, newline-joined.

    Raises UnreadablePdfError when the bytes are not a PDF at all. Returns
    an empty string for well-formed PDFs with no extractable text.
    """
    if not pdf.startswith(b"%PDF-"):
        raise UnreadablePdfError("input is not a PDF document")
    pieces: list[str] = []
    for match in _STREAM_RE.finditer(pdf):
        header, body = match.group(1), match.group(2)
        content = _decode_stream(header, body)
        if content is None:
            continue
        if b"Tj" not in content and b"TJ" not in content and b"'" not in content:
            continue
        pieces.extend(_extract_from_content(content))
    return "\n".join(pieces)

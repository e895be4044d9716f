"""Tangle notation parsing and schematic 4-plat rendering.

Grammar (whitespace between tokens is ignored)::

    SLOPE := INT "/" UINT | INT
    CF    := "[" (INT ("," INT)*)? "]"
    INT   := ["+" | "-"] DIGITS

Rendering conventions
---------------------
Regions alternate between strands 1-2 (position 0) and strands 2-3
(position 1), starting with 1-2.  A positive coefficient is drawn as
right-handed half-twists.  ASCII draws each half-twist as three rows::

    \\ /        \\ /
     /    (+)    \\    (-)
    / \\        / \\

Rows of the marked site region carry a trailing ``*``.  Regions with more
than ``MAX_DRAWN`` half-twists show ``2 * ELIDE_KEEP`` twists around a
``:`` elision row, so output size is linear in the number of regions.
"""
from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .rational import ContinuedFraction, Slope, cf_eval

MAX_DRAWN = 8
ELIDE_KEEP = 2
STRAND_SPACING = 40
HALF_TWIST_HEIGHT = 20


class NotationError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


# ---------------------------------------------------------------- parsing


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.data = text.encode("utf-8")
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.data) and self.data[self.pos] in b" \t\r\n":
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return chr(self.data[self.pos]) if self.pos < len(self.data) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise NotationError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def integer(self, signed: bool = True) -> int:
        self.skip_ws()
        start = self.pos
        if signed and self.pos < len(self.data) and self.data[self.pos] in b"+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.data) and 48 <= self.data[self.pos] <= 57:
            self.pos += 1
        if self.pos == digits:
            raise NotationError("expected an integer", digits)
        return int(self.data[start:self.pos].decode("ascii"))

    def end(self) -> None:
        self.skip_ws()
        if self.pos != len(self.data):
            raise NotationError(f"unexpected {chr(self.data[self.pos])!r}", self.pos)


def parse_tangle_notation(text: str) -> Slope | ContinuedFraction:
    sc = _Scanner(text)
    if sc.peek() == "[":
        sc.pos += 1
        coeffs: list[int] = []
        if sc.peek() != "]":
            coeffs.append(sc.integer())
            while sc.peek() == ",":
                sc.pos += 1
                coeffs.append(sc.integer())
        sc.expect("]")
        sc.end()
        return ContinuedFraction(tuple(coeffs))
    num = sc.integer()
    den = 1
    if sc.peek() == "/":
        sc.pos += 1
        den_at = sc.pos
        den = sc.integer(signed=False)
        if num == 0 and den == 0:
            raise NotationError("0/0 is not a slope", den_at)
    sc.end()
    return Slope(num, den)


def parse_slope(text: str) -> Slope:
    v = parse_tangle_notation(text)
    if not isinstance(v, Slope):
        raise NotationError("expected a slope, found a continued fraction", 0)
    return v


def parse_cf(text: str) -> ContinuedFraction:
    v = parse_tangle_notation(text)
    if not isinstance(v, ContinuedFraction):
        raise NotationError("expected a continued fraction", 0)
    return v


def parse_value(text: str) -> Slope:
    """Slope denoted by either notation."""
    v = parse_tangle_notation(text)
    return v if isinstance(v, Slope) else cf_eval(v)


# ---------------------------------------------------------------- plats


@dataclass(frozen=True)
class PlatDesc:
    regions: tuple[tuple[int, int], ...] = ()
    site: int | None = None
    framing_note: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "regions", tuple((int(p), int(t)) for p, t in self.regions))
        if self.site is not None and not 0 <= self.site < len(self.regions):
            raise ValueError(f"site {self.site} outside {len(self.regions)} regions")

    @property
    def coefficients(self) -> ContinuedFraction:
        return ContinuedFraction(tuple(t for _, t in self.regions))

    def value(self) -> Slope:
        return cf_eval(self.coefficients)

    def to_json(self) -> dict:
        return {
            "regions": [list(r) for r in self.regions],
            "site": self.site,
            "framing_note": self.framing_note,
        }


def cf_to_plat(cf: ContinuedFraction, site: int | None = None, framing_note: str | None = None) -> PlatDesc:
    return PlatDesc(tuple((i % 2, a) for i, a in enumerate(cf.coeffs)), site, framing_note)


def plat_closure(p: PlatDesc):
    from .twobridge import tb_closure

    return tb_closure(p.value())


# ---------------------------------------------------------------- rendering


def _drawn_twists(t: int) -> tuple[int, bool]:
    n = abs(t)
    if n > MAX_DRAWN:
        return 2 * ELIDE_KEEP, True
    return n, False


_GLYPH = {1: ("\\ /", " / ", "/ \\"), -1: ("\\ /", " \\ ", "/ \\")}


def _ascii_row(pos: int, mid: str) -> str:
    cols = ["|", " ", "|", " ", "|", " ", "|"]
    c = 2 * pos
    cols[c:c + 3] = list(mid)
    return "".join(cols)


def render_ascii(plat: PlatDesc) -> str:
    lines = ["o o o o", "| | | |"]
    for idx, (pos, t) in enumerate(plat.regions):
        marker = " <== site" if idx == plat.site else ""
        label = f"  [{idx}] {t:+d} on strands {pos + 1}-{pos + 2}{marker}"
        n, elided = _drawn_twists(t)
        rows: list[str] = []
        if n == 0:
            rows.append(_ascii_row(pos, "|.|"))
        else:
            glyph = _GLYPH[1 if t > 0 else -1]
            for k in range(n):
                if elided and k == ELIDE_KEEP:
                    rows.append(_ascii_row(pos, " : ") + f"  ({abs(t) - 2 * ELIDE_KEEP} more)")
                rows.extend(_ascii_row(pos, g) for g in glyph)
        rows[0] += label
        if idx == plat.site:
            rows[1:] = [r + "  *" for r in rows[1:]]
        lines.extend(rows)
    lines.append("\\_/ \\_/")
    if plat.framing_note:
        lines.append(f"note: {plat.framing_note}")
    return "\n".join(lines) + "\n"


def render_svg(plat: PlatDesc) -> str:
    sp, h = STRAND_SPACING, HALF_TWIST_HEIGHT
    margin = sp
    xs = [margin + i * sp for i in range(4)]
    blocks: list[tuple[int, int, int, bool, int]] = []  # (region, pos, rows, elided, sign)
    for idx, (pos, t) in enumerate(plat.regions):
        n, elided = _drawn_twists(t)
        rows = max(n, 1) + (1 if elided else 0)
        blocks.append((idx, pos, rows, elided, (t > 0) - (t < 0)))
    total_rows = sum(b[2] for b in blocks)
    height = 2 * margin + (total_rows + 1) * h
    width = 2 * margin + 3 * sp + 160
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<g stroke="black" stroke-width="2" fill="none">',
    ]
    y = margin
    for x in xs:
        out.append(f'<circle cx="{x}" cy="{y}" r="3" fill="black"/>')
    for idx, pos, rows, elided, sign in blocks:
        t = plat.regions[idx][1]
        top = y
        bottom = y + rows * h
        if idx == plat.site:
            out.append(
                f'<rect x="{xs[pos] - 10}" y="{top}" width="{sp + 20}" height="{bottom - top}" '
                f'fill="#ffe08a" stroke="#d08000" stroke-dasharray="4 2"/>'
            )
        for s in range(4):
            if s not in (pos, pos + 1):
                out.append(f'<line x1="{xs[s]}" y1="{top}" x2="{xs[s]}" y2="{bottom}"/>')
        xl, xr = xs[pos], xs[pos + 1]
        if t == 0:
            out.append(f'<line x1="{xl}" y1="{top}" x2="{xl}" y2="{bottom}"/>')
            out.append(f'<line x1="{xr}" y1="{top}" x2="{xr}" y2="{bottom}"/>')
        else:
            n = rows - (1 if elided else 0)
            yy = top
            for k in range(n):
                if elided and k == ELIDE_KEEP:
                    out.append(
                        f'<text x="{(xl + xr) // 2}" y="{yy + h - 5}" font-size="12" stroke="none" '
                        f'fill="black" text-anchor="middle">+{abs(t) - 2 * ELIDE_KEEP}</text>'
                    )
                    yy += h
                over = (xl, yy + h, xr, yy) if sign > 0 else (xl, yy, xr, yy + h)
                under = (xr, yy + h, xl, yy) if sign > 0 else (xr, yy, xl, yy + h)
                out.append(f'<line x1="{over[0]}" y1="{over[1]}" x2="{over[2]}" y2="{over[3]}"/>')
                mx, my = (xl + xr) // 2, yy + h // 2
                out.append(
                    f'<line x1="{under[0]}" y1="{under[1]}" x2="{mx + 4 * (1 if under[0] > mx else -1)}" '
                    f'y2="{my + 2 * (1 if under[1] > my else -1)}"/>'
                )
                out.append(
                    f'<line x1="{mx - 4 * (1 if under[0] > mx else -1)}" '
                    f'y1="{my - 2 * (1 if under[1] > my else -1)}" x2="{under[2]}" y2="{under[3]}"/>'
                )
                yy += h
        out.append(
            f'<text x="{xs[3] + 20}" y="{top + h // 2 + 4}" font-size="12" stroke="none" fill="black">'
            f'{escape(f"[{idx}] {t:+d}")}{" site" if idx == plat.site else ""}</text>'
        )
        y = bottom
    for a, b in ((0, 1), (2, 3)):
        out.append(f'<path d="M {xs[a]} {y} Q {(xs[a] + xs[b]) // 2} {y + h} {xs[b]} {y}"/>')
    out.append("</g>")
    if plat.framing_note:
        out.append(
            f'<text x="{margin}" y="{height - 5}" font-size="11" fill="black">{escape(plat.framing_note)}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def plat_render(p: PlatDesc, format: str = "ascii") -> str:
    if format == "ascii":
        return render_ascii(p)
    if format == "svg":
        return render_svg(p)
    raise ValueError(f"unknown format {format!r}; expected 'ascii' or 'svg'")

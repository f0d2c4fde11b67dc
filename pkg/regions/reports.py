"""CSV rows, text summaries and the SVG rendering of a region scan."""
from dataclasses import dataclass
from pathlib import Path

from django.template.loader import render_to_string

from core.exceptions import SymtestError
from regions.constants import CELL_FILL, PANEL_MARGIN, PANEL_SIZE
from symmetric.textformat import render_point, render_rational


def csv_row(row):
    return (render_rational(row.alpha), render_rational(row.beta), render_rational(row.gamma),
            row.status, render_point(row.witness) if row.witness else '',
            str(row.pattern) if row.pattern else '', row.method, row.annotation)


def json_record(row):
    return {
        'alpha': render_rational(row.alpha), 'beta': render_rational(row.beta),
        'gamma': render_rational(row.gamma), 'verdict': row.status,
        'witness': [render_rational(x) for x in row.witness] if row.witness else None,
        'pattern': str(row.pattern) if row.pattern else None,
        'method': row.method, 'annotation': row.annotation,
    }


@dataclass(frozen=True)
class Cell:
    x: float
    y: float
    size: float
    fill: str
    outlined: bool
    title: str


@dataclass(frozen=True)
class Panel:
    alpha: str
    x: int
    cells: tuple


def panels(result):
    """One panel per alpha with beta along x and gamma along y."""
    spec = result.spec
    size = PANEL_SIZE / max(len(spec.betas), len(spec.gammas))
    by_alpha = {}
    for row in result.rows:
        by_alpha.setdefault(row.alpha, []).append(row)
    drawn = []
    for position, alpha in enumerate(spec.alphas):
        left = PANEL_MARGIN + position * (PANEL_SIZE + PANEL_MARGIN)
        cells = []
        for row in by_alpha.get(alpha, []):
            column = spec.betas.index(row.beta)
            line = len(spec.gammas) - 1 - spec.gammas.index(row.gamma)
            cells.append(Cell(
                left + column * size, PANEL_MARGIN + line * size, size,
                CELL_FILL.get(row.status, '#ffffff'), bool(row.annotation),
                f'beta={render_rational(row.beta)} gamma={render_rational(row.gamma)}: '
                f'{row.status}'))
        drawn.append(Panel(render_rational(alpha), left, tuple(cells)))
    return drawn


def render_svg(result):
    spec = result.spec
    return render_to_string('regions/region.svg', {
        'spec': spec,
        'panels': panels(result),
        'width': PANEL_MARGIN + len(spec.alphas) * (PANEL_SIZE + PANEL_MARGIN),
        'height': PANEL_SIZE + 2 * PANEL_MARGIN,
        'panel_size': PANEL_SIZE,
        'margin': PANEL_MARGIN,
    })


def write_svg(result, path):
    path = Path(path)
    try:
        path.write_text(render_svg(result))
    except OSError as exc:
        raise SymtestError(f'Cannot write {path}: {exc.strerror}') from exc
    return path


def summary_context(result):
    return {
        'spec': result.spec,
        'total': len(result.rows),
        'counts': sorted(result.counts().items()),
        'out_of_theorem': result.out_of_theorem(),
        'mismatches': result.mismatches(),
    }

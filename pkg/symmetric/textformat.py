"""Text format of power-sum forms.

    n = 3
    degree = 12
    1 * M4^3
    -1/10 * M2^6
    1 * M6^2
    1 * M6 * M2^3

One term per line, ``<rational> * M<j>^<k> * ...``. ``^1`` may be omitted and
is never rendered; ``#`` starts a comment. ``render_form`` is canonical and
``parse_form(render_form(f)) == f``.
"""
import re
from fractions import Fraction

from core.exceptions import FormSyntaxError
from symmetric.powersums import PowerSumForm, PowerSumTerm

HEADER = re.compile(r'^\s*(n|degree)\s*=\s*(\S+)\s*$')
COEFFICIENT = re.compile(r'\s*([+-]?\d+(?:/\d+)?)\s*')
FACTOR = re.compile(r'\s*\*\s*M(\d+)(?:\^(\d+))?\s*')


def render_rational(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def render_point(point):
    return '(' + ', '.join(render_rational(x) for x in point) + ')'


def render_term(term, coefficient):
    return ' * '.join([render_rational(coefficient)]
                      + [f'M{j}' if k == 1 else f'M{j}^{k}' for j, k in term.factors])


def render_form(form):
    lines = [f'n = {form.n}', f'degree = {form.degree}']
    lines.extend(render_term(term, value) for term, value in form.terms)
    return '\n'.join(lines) + '\n'


def _parse_term(line, number):
    match = COEFFICIENT.match(line)
    if not match:
        raise FormSyntaxError('expected a rational coefficient', number, 1)
    try:
        coefficient = Fraction(match.group(1))
    except ZeroDivisionError:
        raise FormSyntaxError('zero denominator', number, match.start(1) + 1)
    position = match.end()
    factors = []
    while position < len(line):
        match = FACTOR.match(line, position)
        if not match:
            raise FormSyntaxError("expected '* M<j>^<k>'", number, position + 1)
        j = int(match.group(1))
        k = int(match.group(2) or 1)
        if j == 0 or j % 2:
            raise FormSyntaxError(
                f'odd exponent M{j}: only even power sums are allowed',
                number, match.start(1) + 1)
        if k == 0:
            raise FormSyntaxError(f'zero multiplicity on M{j}', number, match.start(2) + 1)
        factors.append((j, k))
        position = match.end()
    if not factors:
        raise FormSyntaxError('a term needs at least one power sum', number, len(line) + 1)
    return PowerSumTerm(tuple(factors)), coefficient


def parse_form(text):
    header = {}
    terms = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].rstrip()
        if not line.strip():
            continue
        match = HEADER.match(line)
        if match:
            key, value = match.groups()
            if terms:
                raise FormSyntaxError(f'header {key!r} after the first term', number, 1)
            try:
                header[key] = int(value)
            except ValueError:
                raise FormSyntaxError(
                    f'{key} must be an integer, got {value!r}', number, match.start(2) + 1)
            continue
        term, coefficient = _parse_term(line, number)
        if 'degree' in header and term.degree != header['degree']:
            raise FormSyntaxError(
                f'term of degree {term.degree} in a form of degree {header["degree"]}',
                number, 1)
        if terms and term.degree != terms[0][0].degree:
            raise FormSyntaxError(
                f'term of degree {term.degree} after terms of degree {terms[0][0].degree}',
                number, 1)
        terms.append((term, coefficient))
    if 'n' not in header:
        raise FormSyntaxError("missing header line 'n = <int>'")
    if 'degree' not in header:
        if not terms:
            raise FormSyntaxError("missing header line 'degree = <int>'")
        header['degree'] = terms[0][0].degree
    try:
        return PowerSumForm(header['n'], header['degree'], tuple(terms))
    except ValueError as exc:
        raise FormSyntaxError(str(exc))

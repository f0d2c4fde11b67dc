# Shared option fields for the symtest commands
from fractions import Fraction
from pathlib import Path

from django import forms

from symmetric.textformat import parse_form
from core.exceptions import FormSyntaxError


class RationalListField(forms.CharField):
    """Comma separated rationals such as ``1,2,3`` or ``1/2,0,3``."""

    def to_python(self, value):
        value = super().to_python(value)
        if not value:
            return ()
        try:
            return tuple(Fraction(part.strip()) for part in value.split(','))
        except (ValueError, ZeroDivisionError):
            raise forms.ValidationError(
                f'{value!r} is not a comma separated list of rationals')


class IntegerListField(forms.CharField):
    """Comma separated nonnegative integers such as ``3,2,1``."""

    def to_python(self, value):
        value = super().to_python(value)
        if not value:
            return ()
        try:
            parts = tuple(int(part.strip()) for part in value.split(','))
        except ValueError:
            raise forms.ValidationError(
                f'{value!r} is not a comma separated list of integers')
        if any(part < 0 for part in parts):
            raise forms.ValidationError('Entries must be nonnegative')
        return parts


class RationalRangeField(forms.CharField):
    """``lo:hi:step`` with rational entries, e.g. ``-4:4:1``."""

    def to_python(self, value):
        value = super().to_python(value)
        if not value:
            return None
        try:
            lo, hi, step = (Fraction(part.strip()) for part in value.split(':'))
        except (ValueError, ZeroDivisionError):
            raise forms.ValidationError(
                f'{value!r} is not a range of the shape lo:hi:step')
        if step <= 0:
            raise forms.ValidationError('The step of a range must be positive')
        if hi < lo:
            raise forms.ValidationError('The range is empty')
        return lo, hi, step


class FormFileForm(forms.Form):
    """Base form of every command reading a power-sum form file."""
    form_file = forms.CharField()

    def clean_form_file(self):
        path = Path(self.cleaned_data.get('form_file'))
        try:
            text = path.read_text()
        except OSError as exc:
            raise forms.ValidationError(f'Cannot read {path}: {exc.strerror}')
        try:
            return parse_form(text)
        except FormSyntaxError as exc:
            raise forms.ValidationError(f'{path}: {exc}')

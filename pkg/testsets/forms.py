from django import forms

from core.forms import FormFileForm, IntegerListField
from testsets.constants import THEOREM_MAIN, THEOREMS


class CheckForm(FormFileForm):
    theorem = forms.ChoiceField(choices=THEOREMS, initial=THEOREM_MAIN)
    override_conditions = forms.BooleanField(required=False)


class RestrictForm(FormFileForm):
    pattern = IntegerListField()

    def clean_pattern(self):
        pattern = self.cleaned_data.get('pattern')
        if not pattern or 0 in pattern:
            raise forms.ValidationError('A pattern is a list of positive multiplicities')
        if any(a < b for a, b in zip(pattern, pattern[1:])):
            raise forms.ValidationError(f'Multiplicities {pattern} must be weakly decreasing')
        return pattern

    def clean(self):
        cleaned_data = super().clean()
        form = cleaned_data.get('form_file')
        pattern = cleaned_data.get('pattern')
        if form is not None and pattern and sum(pattern) > form.n:
            raise forms.ValidationError(
                f'Pattern {pattern} needs {sum(pattern)} coordinates, the form has {form.n}')
        return cleaned_data

from django import forms

from core.forms import IntegerListField

SCHUR_METHODS = (
    ('kostka', 'Kostka expansion'),
    ('determinant', 'Bialternant over Vandermonde'),
)


class SchurForm(forms.Form):
    index = IntegerListField()
    variables = forms.IntegerField(min_value=1, max_value=8)
    method = forms.ChoiceField(choices=SCHUR_METHODS)

    def clean_index(self):
        index = self.cleaned_data.get('index')
        if not index:
            raise forms.ValidationError('The Schur index needs at least one entry')
        if any(a < b for a, b in zip(index, index[1:])):
            raise forms.ValidationError(f'Index {index} must be weakly decreasing')
        return index

    def clean(self):
        cleaned_data = super().clean()
        index = cleaned_data.get('index')
        variables = cleaned_data.get('variables')
        if index and variables and sum(1 for part in index if part) > variables:
            raise forms.ValidationError(
                f'Index {index} has more nonzero parts than {variables} variables')
        return cleaned_data


class KostkaForm(forms.Form):
    shape = IntegerListField()
    content = IntegerListField()

    def clean(self):
        cleaned_data = super().clean()
        shape = cleaned_data.get('shape')
        content = cleaned_data.get('content')
        if shape is not None and content is not None and sum(shape) != sum(content):
            raise forms.ValidationError(
                f'Shape weight {sum(shape)} differs from content weight {sum(content)}')
        return cleaned_data

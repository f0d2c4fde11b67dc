from django import forms

from core.forms import FormFileForm


class MinimizeForm(FormFileForm):
    restarts = forms.IntegerField(min_value=1, required=False)
    max_iterations = forms.IntegerField(min_value=1, required=False)
    grid = forms.IntegerField(min_value=1, required=False)

    def clean(self):
        cleaned_data = super().clean()
        form = cleaned_data.get('form_file')
        grid = cleaned_data.get('grid')
        if form is not None and grid is not None and grid > form.n:
            raise forms.ValidationError(f'Grid patterns need k <= n = {form.n}, got k = {grid}')
        return cleaned_data

from django import forms


# Options of the counterexample command
class CounterexampleForm(forms.Form):
    n = forms.IntegerField(min_value=3)
    d = forms.IntegerField(min_value=3)
    triple = forms.BooleanField(required=False)
    budget = forms.IntegerField(min_value=1, required=False)

    def clean(self):
        cleaned_data = super().clean()
        n = cleaned_data.get('n')
        d = cleaned_data.get('d')
        if n is not None and d is not None and n > d:
            raise forms.ValidationError(
                f'2-points are only known to fail for n <= d, got n={n}, d={d}')
        return cleaned_data

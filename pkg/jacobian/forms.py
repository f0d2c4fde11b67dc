from django import forms

from core.forms import FormFileForm, RationalListField


class JacobianFormFileForm(FormFileForm):

    def clean_form_file(self):
        form = super().clean_form_file()
        if form.degree % 4 or form.degree < 8:
            raise forms.ValidationError(
                f'Jacobian analysis needs a degree 4d >= 8, got {form.degree}')
        return form


class JacobianRankForm(JacobianFormFileForm):
    point = RationalListField()
    drop_mixed = forms.BooleanField(required=False)

    def clean_point(self):
        point = self.cleaned_data.get('point')
        if not point:
            raise forms.ValidationError('A point needs at least one coordinate')
        if any(x < 0 for x in point):
            raise forms.ValidationError('Coordinates must be nonnegative')
        return point

    def clean(self):
        cleaned_data = super().clean()
        form = cleaned_data.get('form_file')
        point = cleaned_data.get('point')
        if form is not None and point and len(point) != form.n:
            raise forms.ValidationError(
                f'Point has {len(point)} coordinates, the form has {form.n} variables')
        return cleaned_data


class MinorFactorForm(JacobianFormFileForm):
    size = forms.IntegerField(min_value=1, required=False)

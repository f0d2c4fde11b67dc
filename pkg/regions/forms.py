from django import forms

from core.forms import RationalRangeField
from regions.constants import PRESET_RANGES, PRESETS


class ScanRegionForm(forms.Form):
    n = forms.IntegerField(min_value=3)
    d = forms.IntegerField(min_value=3)
    preset = forms.ChoiceField(choices=PRESETS, required=False)
    alpha = RationalRangeField(required=False)
    beta = RationalRangeField(required=False)
    gamma = RationalRangeField(required=False)
    svg = forms.CharField(required=False)

    def clean(self):
        cleaned_data = super().clean()
        preset = cleaned_data.get('preset')
        # Explicit ranges win over the preset
        ranges = PRESET_RANGES.get(preset, (None, None, None))
        for name, default in zip(('alpha', 'beta', 'gamma'), ranges):
            if cleaned_data.get(name) is None:
                if default is None:
                    raise forms.ValidationError(f'Give --{name} or a --preset')
                cleaned_data[name] = default
        return cleaned_data

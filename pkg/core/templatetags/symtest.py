from django import template

from symmetric.textformat import render_point, render_rational

register = template.Library()


@register.filter
def rational(value):
    if value is None:
        return '-'
    return render_rational(value)


@register.filter
def point(value):
    if value is None:
        return '-'
    return render_point(value)

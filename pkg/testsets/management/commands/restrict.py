from core.management.base import SymtestCommand
from symmetric.textformat import render_rational
from testsets.forms import RestrictForm
from testsets.patterns import KPointPattern
from testsets.restriction import dehomogenize, restrict


def render_monomial(exponents, coefficient):
    factors = [f'a{i}' if e == 1 else f'a{i}^{e}'
               for i, e in enumerate(exponents, start=1) if e]
    return ' * '.join([render_rational(coefficient)] + factors)


class Command(SymtestCommand):
    help = 'Restrict a power-sum form to a k-point pattern'
    form_class = RestrictForm

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('form_file')
        parser.add_argument('--pattern', required=True, help='multiplicities, e.g. 2,1')

    def handle(self, *args, **options):
        data = self.clean_options(options)
        form = data['form_file']
        pattern = KPointPattern(data['pattern'])
        restricted = restrict(form, pattern)
        terms = restricted.terms()
        univariate = dehomogenize(restricted) if pattern.size == 2 else None
        if self.output_format == 'csv':
            self.emit_csv(
                tuple(f'a{i}' for i in range(1, pattern.size + 1)) + ('coefficient',),
                [exponents + (render_rational(coefficient),) for exponents, coefficient in terms])
        elif self.output_format == 'json-lines':
            self.emit_json_lines(
                {'pattern': list(pattern.multiplicities), 'exponents': list(exponents),
                 'coefficient': render_rational(coefficient)}
                for exponents, coefficient in terms)
        else:
            self.emit_text('testsets/restriction.txt', {
                'pattern': pattern,
                'form': form,
                'lines': [render_monomial(exponents, coefficient)
                          for exponents, coefficient in terms],
                'univariate': univariate,
            })

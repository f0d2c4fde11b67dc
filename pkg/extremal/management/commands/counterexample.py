from core.management.base import SymtestCommand
from extremal.constructions import build_counterexample, nonconvexity_triple
from extremal.forms import CounterexampleForm
from symmetric.textformat import render_form, render_point, render_rational, render_term


class Command(SymtestCommand):
    help = 'Build a form that is nonnegative at every 2-point but not globally'
    form_class = CounterexampleForm

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--d', type=int, required=True)
        parser.add_argument('--triple', action='store_true',
                            help='also print two one-free-term forms with midpoint p')
        parser.add_argument('--budget', type=int, default=None,
                            help='candidate base points (default: SYMTEST_BASE_POINT_BUDGET)')

    def handle(self, *args, **options):
        data = self.clean_options(options)
        witness = build_counterexample(data['n'], data['d'], jobs=self.jobs,
                                       budget=data['budget'], progress=options['verbosity'] >= 2)
        triple = nonconvexity_triple(data['n'], data['d'], witness) if data['triple'] else None
        if self.output_format == 'csv':
            self.emit_csv(('term', 'coefficient'),
                          [(str(term), render_rational(value))
                           for term, value in witness.form.terms])
        elif self.output_format == 'json-lines':
            self.emit_json_lines([{
                'n': witness.n, 'd': witness.d,
                'point': [render_rational(x) for x in witness.point],
                'theta': render_rational(witness.theta),
                'kappa': render_rational(witness.kappa),
                'lambda': render_rational(witness.lam),
                'value': render_rational(witness.value),
                'form': [render_term(term, value) for term, value in witness.form.terms],
            }])
        else:
            self.emit_text('extremal/counterexample.txt', {
                'witness': witness,
                'point': render_point(witness.point),
                'form': render_form(witness.form),
                'triple': [render_form(part) for part in triple[1:]] if triple else None,
            })

from core.management.base import SymtestCommand
from oracle.forms import MinimizeForm
from oracle.minimize import minimize_on_sphere
from oracle.sampling import timofte_grid_check


class Command(SymtestCommand):
    help = 'Approximate the minimum of a form on the unit sphere'
    form_class = MinimizeForm

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('form_file')
        parser.add_argument('--restarts', type=int, default=None,
                            help='multistart count (default: SYMTEST_RESTARTS)')
        parser.add_argument('--max-iterations', type=int, default=None)
        parser.add_argument('--grid', type=int, default=None, metavar='K',
                            help='also sample the patterns with at most K values on a grid')

    def handle(self, *args, **options):
        data = self.clean_options(options)
        form = data['form_file']
        result = minimize_on_sphere(form, data['restarts'], self.seed, data['max_iterations'])
        sample = timofte_grid_check(form, data['grid']) if data['grid'] else None
        if self.output_format == 'csv':
            self.emit_csv(
                ('minimum', 'argmin', 'converged', 'gradient_norm', 'restarts', 'restart_index'),
                [(repr(result.minimum), ','.join(repr(x) for x in result.argmin),
                  result.converged, repr(result.gradient_norm), result.restarts,
                  result.restart_index)])
        elif self.output_format == 'json-lines':
            record = {
                'minimum': result.minimum, 'argmin': list(result.argmin),
                'converged': result.converged, 'gradient_norm': result.gradient_norm,
                'restarts': result.restarts, 'restart_index': result.restart_index,
                'iterations': result.iterations,
            }
            if sample:
                record['grid'] = {'minimum': sample.minimum, 'pattern': str(sample.pattern),
                                  'samples': sample.samples}
            self.emit_json_lines([record])
        else:
            self.emit_text('oracle/minimum.txt', {'result': result, 'sample': sample})

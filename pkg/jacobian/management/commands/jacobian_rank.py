from core.management.base import SymtestCommand
from jacobian.forms import JacobianRankForm
from jacobian.matrices import (
    JacobianSpec, fourth_column_span, in_kernel, kernel_coefficients, rank_at)


class Command(SymtestCommand):
    help = 'Exact rank of the Jacobian of a form\'s spanning set at a rational point'
    form_class = JacobianRankForm

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('form_file')
        parser.add_argument('--point', required=True, help='coordinates, e.g. 1,2,3')
        parser.add_argument('--drop-mixed', action='store_true',
                            help='leave out the M_2d M_2^d column')

    def handle(self, *args, **options):
        data = self.clean_options(options)
        spec = JacobianSpec.for_form(data['form_file'])
        point = data['point']
        rank = rank_at(spec, point, drop_mixed=data['drop_mixed'])
        span = kernel = None
        if any(point):
            span = fourth_column_span(spec, point)
            kernel = in_kernel(spec, point, kernel_coefficients(spec, point))
        generators = [str(term) for term in spec.generators]
        if self.output_format == 'csv':
            self.emit_csv(('point', 'columns', 'rank'),
                          [(','.join(str(x) for x in point), len(generators), rank)])
        elif self.output_format == 'json-lines':
            self.emit_json_lines([{
                'point': [str(x) for x in point], 'generators': generators,
                'drop_mixed': data['drop_mixed'], 'rank': rank,
                'kernel': kernel,
            }])
        else:
            self.emit_text('jacobian/rank.txt', {
                'generators': generators, 'point': point, 'rank': rank,
                'drop_mixed': data['drop_mixed'], 'span': span, 'kernel': kernel,
            })

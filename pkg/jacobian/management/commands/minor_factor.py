from core.management.base import SymtestCommand
from jacobian.analysis import minor_factorization
from jacobian.forms import MinorFactorForm
from jacobian.matrices import JacobianSpec


class Command(SymtestCommand):
    help = 'Factor a leading Jacobian minor into Vandermonde times Schur polynomials'
    form_class = MinorFactorForm

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('form_file')
        parser.add_argument('--size', type=int, default=None,
                            help='minor size (default: all columns but the mixed one)')

    def handle(self, *args, **options):
        data = self.clean_options(options)
        factorization = minor_factorization(
            JacobianSpec.for_form(data['form_file']), data['size'])
        if self.output_format == 'csv':
            self.emit_csv(
                ('constant', 'prefactor', 'sign', 'exponents', 'schur_index', 'verified'),
                [(factorization.constant * summand.constant,
                  str(factorization.prefactor * summand.prefactor), summand.sign,
                  ','.join(str(e) for e in summand.exponents), str(summand.schur_index),
                  factorization.verified)
                 for summand in factorization.summands])
        elif self.output_format == 'json-lines':
            self.emit_json_lines(
                {'constant': factorization.constant * summand.constant,
                 'prefactor': str(factorization.prefactor * summand.prefactor),
                 'sign': summand.sign, 'exponents': list(summand.exponents),
                 'schur_index': list(summand.schur_index.parts),
                 'verified': factorization.verified}
                for summand in factorization.summands)
        else:
            self.emit_text('jacobian/minor.txt', {'factorization': factorization})

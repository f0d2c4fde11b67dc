from schur.forms import SchurForm
from schur.polynomials import schur_by_determinant, schur_by_kostka
from core.management.base import SymtestCommand


class Command(SymtestCommand):
    help = 'Expand a Schur polynomial over monomial symmetric functions'
    form_class = SchurForm

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('index', help='Schur index, e.g. 3,2,1')
        parser.add_argument('--vars', dest='variables', type=int, required=True)
        parser.add_argument('--method', choices=('kostka', 'determinant'), default='kostka')

    def handle(self, *args, **options):
        data = self.clean_options(options)
        build = schur_by_kostka if data['method'] == 'kostka' else schur_by_determinant
        schur = build(data['index'], data['variables'])
        rows = [(str(partition), coefficient) for partition, coefficient in schur.items()]
        if self.output_format == 'csv':
            self.emit_csv(('partition', 'coefficient'), rows)
        elif self.output_format == 'json-lines':
            self.emit_json_lines(
                {'partition': list(partition.parts), 'coefficient': coefficient}
                for partition, coefficient in schur.items())
        else:
            title = f'S{schur.index} in {schur.l} variables'
            self.emit_text('schur/expansion.txt', {'title': title, 'rows': rows})

from schur.forms import KostkaForm
from schur.tableaux import kostka
from core.management.base import SymtestCommand


class Command(SymtestCommand):
    help = 'Count semistandard Young tableaux of a shape and content'
    form_class = KostkaForm

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('shape', help='e.g. 2,1')
        parser.add_argument('content', help='e.g. 1,1,1')

    def handle(self, *args, **options):
        data = self.clean_options(options)
        value = kostka(data['shape'], data['content'])
        shape = ','.join(str(part) for part in data['shape'])
        content = ','.join(str(part) for part in data['content'])
        if self.output_format == 'csv':
            self.emit_csv(('shape', 'content', 'kostka'), [(shape, content, value)])
        elif self.output_format == 'json-lines':
            self.emit_json_lines([{'shape': list(data['shape']),
                                   'content': list(data['content']), 'kostka': value}])
        else:
            self.emit_text('schur/expansion.txt', {'title': f'K(({shape}), ({content}))',
                                                   'rows': [(f'({content})', value)]})

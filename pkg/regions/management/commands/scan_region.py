from core.management.base import SymtestCommand
from regions.constants import CSV_HEADER, PRESETS
from regions.forms import ScanRegionForm
from regions.reports import csv_row, json_record, summary_context, write_svg
from regions.scan import RegionScanSpec, scan_region


class Command(SymtestCommand):
    help = 'Scan alpha M4^d + beta M2^2d + gamma M2d^2 + M2d M2^d over a coefficient grid'
    form_class = ScanRegionForm

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--n', type=int, default=4)
        parser.add_argument('--d', type=int, default=3)
        parser.add_argument('--preset', choices=[name for name, _ in PRESETS], default=None)
        parser.add_argument('--alpha', help='lo:hi:step')
        parser.add_argument('--beta', help='lo:hi:step')
        parser.add_argument('--gamma', help='lo:hi:step')
        parser.add_argument('--svg', help='write the region plot to this file')

    def handle(self, *args, **options):
        data = self.clean_options(options)
        spec = RegionScanSpec.from_ranges(data['n'], data['d'], data['alpha'], data['beta'],
                                          data['gamma'])
        result = scan_region(spec, jobs=self.jobs, progress=options['verbosity'] >= 2)
        if data['svg']:
            path = write_svg(result, data['svg'])
            self.stderr.write(self.style.SUCCESS(f'wrote {path}'))
        if self.output_format == 'csv':
            self.emit_csv(CSV_HEADER, [csv_row(row) for row in result.rows])
        elif self.output_format == 'json-lines':
            self.emit_json_lines(json_record(row) for row in result.rows)
        else:
            self.emit_text('regions/summary.txt', summary_context(result))

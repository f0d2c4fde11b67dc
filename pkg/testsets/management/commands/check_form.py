from core.exceptions import ConditionsNotSatisfied
from core.management.base import EXIT_NEGATIVE, EXIT_OK, EXIT_UNDECIDED, SymtestCommand
from symmetric.textformat import render_point
from testsets.constants import (
    NONNEGATIVE, NOT_NONNEGATIVE, THEOREM_MAIN, THEOREM_MAIN2, THEOREMS)
from testsets.engine import decide_nonneg_2point, decide_nonneg_mpoint, timofte_check
from testsets.forms import CheckForm

EXIT_CODES = {NONNEGATIVE: EXIT_OK, NOT_NONNEGATIVE: EXIT_NEGATIVE}


def trail_record(entry):
    return {
        'pattern': list(entry.pattern.multiplicities),
        'outcome': entry.outcome,
        'method': entry.method,
        'polynomial': None if entry.polynomial is None else str(entry.polynomial),
        'minimum': entry.minimum,
        'witness': None if entry.witness is None else [str(x) for x in entry.witness],
    }


class Command(SymtestCommand):
    help = 'Decide nonnegativity of a power-sum form through a k-point test set'
    form_class = CheckForm

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('form_file')
        parser.add_argument('--theorem', choices=[key for key, _ in THEOREMS],
                            default=THEOREM_MAIN)
        parser.add_argument('--override-conditions', action='store_true')

    def decide(self, form, theorem, override):
        if theorem == THEOREM_MAIN:
            return decide_nonneg_2point(form, override=override, jobs=self.jobs)
        if theorem == THEOREM_MAIN2:
            return decide_nonneg_mpoint(form, override=override, jobs=self.jobs, seed=self.seed)
        return timofte_check(form, jobs=self.jobs, seed=self.seed)

    def handle(self, *args, **options):
        data = self.clean_options(options)
        form = data['form_file']
        try:
            verdict = self.decide(form, data['theorem'], data['override_conditions'])
        except ConditionsNotSatisfied as exc:
            # Report the violated conditions instead of a verdict
            self.stderr.write(self.style.ERROR(str(exc)))
            for note in exc.report.notes:
                self.stderr.write(f'note: {note}')
            self.exit_code = EXIT_UNDECIDED
            return
        self.exit_code = EXIT_CODES.get(verdict.status, EXIT_UNDECIDED)
        if self.output_format == 'csv':
            self.emit_csv(
                ('pattern', 'outcome', 'method', 'polynomial', 'minimum', 'witness'),
                [(str(entry.pattern), entry.outcome, entry.method, entry.polynomial or '',
                  '' if entry.minimum is None else entry.minimum,
                  '' if entry.witness is None else render_point(entry.witness))
                 for entry in verdict.trail])
        elif self.output_format == 'json-lines':
            records = [trail_record(entry) for entry in verdict.trail]
            records.append({
                'status': verdict.status,
                'theorem': verdict.theorem,
                'witness': None if verdict.witness is None else [str(x) for x in verdict.witness],
                'notes': list(verdict.notes),
            })
            self.emit_json_lines(records)
        else:
            self.emit_text('testsets/verdict.txt', {'form': form, 'verdict': verdict})

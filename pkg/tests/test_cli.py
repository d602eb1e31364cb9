"""End-to-end tests of the bohrkit command line."""

import csv
import json
import logging
import math
from argparse import Namespace

import pytest

from bohrkit.cli import main
from bohrkit.commands.common import emit_reports
from bohrkit.core.config import Config
from bohrkit.core.reports import VerificationReport
from bohrkit.core.run_config import VERIFY_TARGETS, RunConfig
from bohrkit.utils.formatters import Formatter
from bohrkit.utils.logger import run_context, setup_logging


@pytest.fixture
def run_cli(tmp_path):
    """Invoke main() with an isolated config file and report directory."""
    config_path = tmp_path / "config.json"
    reports = tmp_path / "out"

    def invoke(*argv, output_dir=reports):
        args = ['--config', str(config_path), *argv]
        if argv and argv[0] not in ('config',):
            args += ['--output-dir', str(output_dir)]
        return main(args)

    invoke.config_path = config_path
    invoke.reports = reports
    return invoke


def _rows(path):
    with open(path, newline='', encoding='utf-8') as f:
        return list(csv.DictReader(f))


class TestParser:

    def test_no_command_prints_help(self, capsys):
        assert main([]) == 0
        assert 'bohrkit' in capsys.readouterr().out

    def test_help(self):
        assert main(['--help']) == 0

    def test_unknown_target(self, run_cli):
        assert run_cli('verify', 'nonsense') == 2

    def test_unknown_command(self):
        assert main(['frobnicate']) == 2

    def test_invalid_config_file(self, tmp_path, capsys):
        bad = tmp_path / "broken.json"
        bad.write_text("{not json")
        assert main(['--config', str(bad), 'xi']) == 2
        assert 'Configuration error' in capsys.readouterr().err


class TestConstants:

    def test_rstar_single(self, run_cli):
        assert run_cli('rstar', '--p', '1', '--N', '2') == 0
        [row] = _rows(run_cli.reports / 'rstar-0.csv')
        assert float(row['xi_p']) == 0.5
        assert float(row['rstar']) == pytest.approx((math.sqrt(3) - 1) / 2, abs=1e-10)
        assert row['note'] == ''

    def test_rstar_precondition(self, run_cli, capsys):
        assert run_cli('rstar', '--p', '2', '--N', '1') == 2
        assert 'PRECONDITION_ERROR' in capsys.readouterr().err

    def test_rstar_grid_marks_bad_rows(self, run_cli):
        assert run_cli('rstar', '--p', '2', '--N', '1', '2') == 0
        first, second = _rows(run_cli.reports / 'rstar-0.csv')
        assert (first['rstar'], first['note']) == ('', 'xi_p >= N')
        assert float(second['rstar']) == pytest.approx(math.sqrt((math.sqrt(5) - 1) / 2), abs=1e-10)

    def test_xi_table(self, run_cli):
        assert run_cli('xi', '--p', '1', '2', '--seed', '3') == 0
        rows = _rows(run_cli.reports / 'xi-3.csv')
        assert [float(r['xi_p']) for r in rows] == [0.5, 1.0]

    def test_json_format(self, run_cli):
        assert run_cli('xi', '--p', '1', '--format', 'json') == 0
        data = json.loads((run_cli.reports / 'xi-0.json').read_text())
        assert data[0]['xi_p'] == '0.5'

    def test_lq_witness(self, run_cli):
        assert run_cli('lq-witness', '--p', '1', '--q', '2', '--N', '2', '--a', '0.9') == 0
        [row] = _rows(run_cli.reports / 'lq-witness-0.csv')
        assert float(row['radius_bound']) == pytest.approx(0.2294157, rel=1e-5)

    def test_lq_witness_needs_q_above_p(self, run_cli):
        assert run_cli('lq-witness', '--p', '2', '--q', '2') == 2


class TestVerify:

    def test_refined_equality_case(self, run_cli):
        code = run_cli('verify', 'refined', '--alpha', '0.5', '--psi', 'z', '--r', '0.3333333')
        assert code == 0
        [row] = _rows(run_cli.reports / 'verify-refined-0.csv')
        assert row['status'] == 'pass'

    @pytest.mark.parametrize("target", VERIFY_TARGETS)
    def test_every_target_runs_with_defaults(self, run_cli, target):
        assert run_cli('verify', target, '--samples', '2') == 0
        rows = _rows(run_cli.reports / f'verify-{target}-0.csv')
        assert rows
        assert all(row['status'] != 'fail' for row in rows)

    def test_negative_seed_rejected(self, run_cli, capsys):
        assert run_cli('verify', 'milne', '--samples', '3', '--seed', '-1') == 2
        assert 'seed' in capsys.readouterr().err

    def test_bohr_on_four_by_four_matrices(self, run_cli):
        assert run_cli('verify', 'bohr', '--d', '4', '--samples', '5') == 0

    def test_refined_with_tiny_alpha(self, run_cli):
        assert run_cli('verify', 'refined', '--alpha', '0.001', '--psi', 'z') == 0
        [row] = _rows(run_cli.reports / 'verify-refined-0.csv')
        assert row['status'] == 'pass'

    def test_zero_samples_rejected(self, run_cli):
        assert run_cli('verify', 'bohr', '--samples', '0') == 2
        assert run_cli('verify', 'rogosinski-a', '--family', 'poly_random', '--samples', '0') == 2

    def test_radius_beyond_one_third_rejected(self, run_cli):
        assert run_cli('verify', 'bohr', '--r', '0.5') == 2

    def test_report_independent_of_workers(self, run_cli, tmp_path):
        base = ('verify', 'subordination', '--samples', '6', '--seed', '4', '--D', '32')
        assert run_cli(*base, '--workers', '1', output_dir=tmp_path / 'one') == 0
        assert run_cli(*base, '--workers', '8', output_dir=tmp_path / 'eight') == 0
        one = (tmp_path / 'one' / 'verify-subordination-4.csv').read_bytes()
        eight = (tmp_path / 'eight' / 'verify-subordination-4.csv').read_bytes()
        assert one == eight

    def test_failing_report_exits_one(self, tmp_path, capsys):
        report = VerificationReport('bohr', slack=1e-9)
        report.record(-0.5, fingerprint="forced")
        run = RunConfig(command='verify', target='bohr').validate()
        args = Namespace(quiet=False, output_dir=str(tmp_path))
        assert emit_reports([report], run, args, Config(), Formatter(use_color=False)) == 1
        assert 'Verification failed: bohr' in capsys.readouterr().out
        assert (tmp_path / 'verify-bohr-0.csv').exists()

    def test_findings_do_not_fail(self, tmp_path):
        report = VerificationReport('rogosinski-b-uncoupled', slack=1e-9, asserted=False)
        report.record(-0.5)
        run = RunConfig(command='verify', target='rogosinski-b').validate()
        args = Namespace(quiet=True, output_dir=str(tmp_path))
        assert emit_reports([report], run, args, Config(), Formatter(use_color=False)) == 0


class TestRadius:

    def test_chains(self, run_cli):
        assert run_cli('chains', '--p', '2', '--N', '1', '--samples', '20') == 0
        assert (run_cli.reports / 'chains-0.csv').exists()

    def test_chains_lq_with_default_q(self, run_cli):
        assert run_cli('chains', '--space', 'lq', '--samples', '5') == 0
        rows = _rows(run_cli.reports / 'chains-0.csv')
        assert [row['family'] for row in rows] == ['l4^2;p=2']

    def test_chains_lq_rejects_q_not_above_p(self, run_cli, capsys):
        assert run_cli('chains', '--space', 'lq', '--q', '2', '--samples', '5') == 2
        assert '--q' in capsys.readouterr().err


class TestConfigCommands:

    def test_set_get_roundtrip(self, run_cli, capsys):
        assert run_cli('config', 'set', 'verify.t_grid', '512') == 0
        saved = json.loads(run_cli.config_path.read_text())
        assert saved['verify']['t_grid'] == 512
        capsys.readouterr()
        assert run_cli('config', 'get', 'verify.t_grid') == 0
        assert capsys.readouterr().out.strip() == '512'

    def test_bad_value_type(self, run_cli):
        assert run_cli('config', 'set', 'sweep.samples', 'many') == 2

    def test_unknown_key(self, run_cli):
        assert run_cli('config', 'get', 'sweep.colour') == 2

    @pytest.mark.parametrize("action", [('get',), ('show',), ('set', '3'), ('reset',)])
    def test_unknown_setting_in_known_section(self, run_cli, action):
        verb, *value = action
        assert run_cli('config', verb, 'sweep.colour', *value) == 2

    def test_iteration_cap_key_removed(self, run_cli):
        assert run_cli('config', 'get', 'numerics.max_iter') == 2

    def test_reset_needs_key(self, run_cli):
        assert run_cli('config', 'reset') == 2

    def test_reset_key(self, run_cli):
        assert run_cli('config', 'set', 'sweep.seed', '9') == 0
        assert run_cli('config', 'reset', 'sweep.seed') == 0
        assert json.loads(run_cli.config_path.read_text())['sweep']['seed'] == 0

    def test_show_json(self, run_cli, capsys):
        assert run_cli('config', 'show', '--json') == 0
        data = json.loads(capsys.readouterr().out)
        assert data['series']['degree'] == 64

    def test_stored_defaults_feed_runs(self, run_cli):
        assert run_cli('config', 'set', 'sweep.seed', '5') == 0
        assert run_cli('xi', '--p', '1') == 0
        assert (run_cli.reports / 'xi-5.csv').exists()


class TestLogging:

    def test_run_label_reaches_log_file(self, run_cli, tmp_path):
        data_dir = tmp_path / 'data'
        assert run_cli('config', 'set', 'general.data_dir', str(data_dir)) == 0
        assert run_cli('config', 'set', 'general.log_to_file', 'true') == 0
        assert run_cli('-v', 'xi', '--p', '1', '--seed', '2') == 0
        [log_file] = (data_dir / 'logs').glob('bohrkit_*.log')
        text = log_file.read_text(encoding='utf-8')
        assert '[xi#2]' in text
        assert 'Report written' in text

    def test_run_context_nests(self):
        logger = setup_logging('INFO', use_color=False)
        stamp = logger.handlers[0].filters[0]
        record = logging.makeLogRecord({'msg': 'x'})
        with run_context('verify-bohr#7'):
            with run_context('rstar#0'):
                stamp.filter(record)
                assert record.run == 'rstar#0'
            stamp.filter(record)
            assert record.run == 'verify-bohr#7'
        stamp.filter(record)
        assert record.run == '-'


class TestFormatter:

    def test_numeric_columns_right_aligned(self):
        text = Formatter(use_color=False).simple_table(['p', 'note'], [[1.0, 'x'], [0.3660254037844386, None]])
        header, rule, first, second = text.splitlines()
        assert header.startswith('           p')
        assert first.startswith('           1  x')
        assert second.rstrip() == '0.3660254038'

    def test_empty_table(self):
        assert Formatter(use_color=False).simple_table(['p'], []) == "No data to display."

    def test_status_markers(self):
        formatter = Formatter(use_color=False)
        assert formatter.status_icon('finding') == "⚠ finding"
        assert formatter.status_icon('pass') == "✓ pass"

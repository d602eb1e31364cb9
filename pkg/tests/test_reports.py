"""Tests for verification reports, seeded sweeps and run configuration."""

import csv
import io
import json
import math
from argparse import Namespace

import pytest
from hypothesis import given, strategies as st

from bohrkit.core.config import SECTIONS, Config
from bohrkit.core.errors import ReportError, ValidationError
from bohrkit.core.reports import (
    CSV_COLUMNS,
    VerificationReport,
    merge_reports,
    render_report,
    render_table,
    write_report,
    write_table,
)
from bohrkit.core.run_config import RunConfig
from bohrkit.core.sweep import run_sweep, spawn_generators
from bohrkit.utils.validators import validate_config_key


def _report(margins, inequality_id='bohr', seed=0, asserted=True, degenerate=False):
    report = VerificationReport(inequality_id, slack=1e-9, seed=seed, asserted=asserted, degenerate=degenerate)
    for j, m in enumerate(margins):
        report.record(m, fingerprint=f"f{seed}", location=f"k={j}")
    return report


margin_lists = st.lists(st.floats(min_value=-1.0, max_value=1.0), min_size=1, max_size=6)


class TestVerificationReport:

    def test_pass_and_fail(self):
        assert _report([0.1, 0.0, -1e-10]).status == 'pass'
        failing = _report([0.1, -0.01])
        assert failing.status == 'fail'
        assert failing.is_failure
        assert [v.location for v in failing.violations] == ["k=1"]

    def test_empty_report_passes(self):
        report = VerificationReport('milne', slack=1e-9)
        assert report.min_margin == math.inf
        assert report.status == 'pass'

    def test_degenerate_status(self):
        assert _report([0.5], degenerate=True).status == 'degenerate'
        assert _report([-0.5], degenerate=True).status == 'fail'

    def test_findings_never_fail_a_run(self):
        report = _report([-0.5], asserted=False)
        assert report.status == 'fail'
        assert not report.is_failure

    def test_nan_margin_rejected(self):
        with pytest.raises(ValidationError):
            _report([math.nan])

    def test_row_uses_full_precision(self):
        row = _report([1 / 3]).to_row()
        assert row['min_margin'] == repr(1 / 3)
        assert set(row) == set(CSV_COLUMNS)


class TestMerge:

    @given(a=margin_lists, b=margin_lists, c=margin_lists)
    def test_order_independent(self, a, b, c):
        parts = [_report(a, seed=1), _report(b, seed=2), _report(c, seed=3)]
        forward = merge_reports(parts).to_dict()
        backward = merge_reports(parts[::-1]).to_dict()
        assert forward == backward

    @given(a=margin_lists, b=margin_lists, c=margin_lists)
    def test_associative(self, a, b, c):
        x, y, z = _report(a, seed=1), _report(b, seed=2), _report(c, seed=3)
        left = merge_reports([merge_reports([x, y]), z]).to_dict()
        right = merge_reports([x, merge_reports([y, z])]).to_dict()
        assert left == right

    def test_combines_fields(self):
        merged = merge_reports([_report([0.2], seed=4), _report([-0.3], seed=2)])
        assert merged.min_margin == -0.3
        assert merged.samples == 2
        assert merged.seed == 2
        assert len(merged.violations) == 1

    def test_degenerate_only_when_all_parts_are(self):
        assert not merge_reports([_report([0.1], degenerate=True), _report([0.1])]).degenerate
        assert merge_reports([_report([0.1], degenerate=True), _report([0.2], degenerate=True)]).degenerate

    def test_rejects_mixed_ids(self):
        with pytest.raises(ValidationError):
            merge_reports([_report([0.1]), _report([0.1], inequality_id='wiener')])

    def test_rejects_empty(self):
        with pytest.raises(ValidationError):
            merge_reports([])


class TestRendering:

    def test_csv_columns(self):
        text = render_report([_report([0.25]), _report([-0.5], inequality_id='wiener')])
        rows = list(csv.DictReader(io.StringIO(text)))
        assert list(rows[0]) == CSV_COLUMNS
        assert [r['status'] for r in rows] == ['pass', 'fail']
        assert rows[1]['violations'] == '1'

    def test_json_is_sorted(self):
        report = _report([0.25])
        report.details.update({'z': 1, 'a': 2})
        data = json.loads(render_report([report], 'json'))
        assert list(data[0]['details']) == ['a', 'z']

    def test_unknown_format(self):
        with pytest.raises(ValidationError):
            render_report([_report([0.1])], 'xml')

    def test_table_keeps_full_precision(self):
        text = render_table(['p', 'value', 'note'], [[1.0, 1 / 3, None]])
        assert text.splitlines() == ['p,value,note', f"1.0,{1 / 3!r},"]

    def test_write_report(self, tmp_path):
        path = write_report([_report([0.1])], 'verify-bohr', 7, 'csv', tmp_path)
        assert path == tmp_path / 'verify-bohr-7.csv'
        assert path.read_text(encoding='utf-8') == render_report([_report([0.1])])

    def test_write_table_json(self, tmp_path):
        path = write_table(['p', 'xi_p'], [[1.0, 0.5]], 'xi', fmt='json', directory=tmp_path)
        assert json.loads(path.read_text()) == [{'p': '1.0', 'xi_p': '0.5'}]

    def test_unwritable_directory(self, tmp_path):
        blocker = tmp_path / 'blocker'
        blocker.write_text('not a directory')
        with pytest.raises(ReportError):
            write_report([_report([0.1])], 'verify-bohr', 0, 'csv', blocker)


class TestSweep:

    def test_generators_are_independent(self):
        draws = [g.random() for g in spawn_generators(5, 4)]
        assert len(set(draws)) == 4

    def test_same_seed_same_draws(self):
        assert [g.random() for g in spawn_generators(9, 3)] == [g.random() for g in spawn_generators(9, 3)]

    @pytest.mark.parametrize("workers", [2, 4, 8])
    def test_result_independent_of_workers(self, workers):
        task = lambda i, rng: (i, rng.standard_normal())
        assert run_sweep(task, 16, seed=3, workers=workers) == run_sweep(task, 16, seed=3, workers=1)

    def test_rejects_empty_sweep(self):
        with pytest.raises(ValidationError):
            run_sweep(lambda i, rng: i, 0)


class TestRunConfig:

    def test_from_namespace_uses_config_defaults(self):
        config = Config()
        config.sweep.samples = 12
        args = Namespace(command='rstar', p=[1.0, 2.0], N=[2], seed=None, samples=None)
        run = RunConfig.from_namespace(args, config)
        assert run.p_grid == (1.0, 2.0)
        assert run.N_grid == (2,)
        assert run.samples == 12
        assert run.report_name == 'rstar'

    def test_flags_override_config(self):
        args = Namespace(command='verify', target='bohr', samples=5, seed=9, alpha='0.3+0.4i')
        run = RunConfig.from_namespace(args, Config())
        assert (run.samples, run.seed) == (5, 9)
        assert run.alpha == complex(0.3, 0.4)
        assert run.report_name == 'verify-bohr'

    @pytest.mark.parametrize("changes", [
        {'samples': 0},
        {'p_grid': (0.5,)},
        {'N_grid': ()},
        {'family': 'cardioid'},
        {'alpha': 1.0},
        {'psi': 'z3'},
        {'output': 'xml'},
        {'seed': -1},
        {'q': 0.5},
    ])
    def test_invalid_fields(self, changes):
        with pytest.raises(ValidationError):
            RunConfig(command='verify', target='bohr').with_overrides(**changes)

    def test_seed_zero_is_valid(self):
        assert RunConfig(command='xi', seed=0).validate().seed == 0

    @pytest.mark.parametrize("p_grid, q, expected", [
        ((1.0,), None, 2.0),
        ((2.0,), None, 4.0),
        ((2.0, 3.0), None, 6.0),
        ((2.0,), 2.5, 2.5),
    ])
    def test_lq_exponent(self, p_grid, q, expected):
        run = RunConfig(command='chains', p_grid=p_grid, q=q, space='lq').validate()
        assert run.lq_exponent == expected

    def test_verify_needs_target(self):
        with pytest.raises(ValidationError):
            RunConfig(command='verify').validate()

    def test_bad_alpha_string(self):
        with pytest.raises(ValidationError):
            RunConfig.from_namespace(Namespace(command='verify', target='refined', alpha='half'), Config())

    def test_dimension_defaults(self):
        run = RunConfig(command='verify', target='bohr', operator_dim=3)
        assert run.dim_for(scalar=True) == 1
        assert run.dim_for(scalar=False) == 3
        assert RunConfig(command='verify', target='bohr', d=4).dim_for(scalar=True) == 4

    def test_effective_slack(self):
        run = RunConfig(command='verify', target='bohr')
        assert run.effective_slack('mobius') == 1e-9
        assert run.effective_slack('poly_random') == 1e-7
        assert RunConfig(command='verify', target='bohr', slack=1e-3).effective_slack('mobius') == 1e-3


class TestConfigKeys:

    @pytest.mark.parametrize("key", ['numerics.tol', 'sweep.seed', 'general.log_to_file'])
    def test_known_keys(self, key):
        section, setting = validate_config_key(key, SECTIONS)
        assert f"{section}.{setting}" == key

    @pytest.mark.parametrize("key", ['sweep.colour', 'numerics.max_iter', 'colour.sweep', 'sweep', 'a.b.c'])
    def test_unknown_keys_rejected(self, key):
        with pytest.raises(ValidationError) as excinfo:
            validate_config_key(key, SECTIONS)
        assert excinfo.value.field == 'key'

    def test_iteration_cap_is_not_configurable(self):
        assert 'max_iter' not in Config().to_dict()['numerics']

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from contextlib import redirect_stdout, redirect_stderr
import io
import json
import os
import tempfile
import unittest
from unittest import mock

from tubular.algebra.arith import function_field
from tubular.cli.report import Report
from tubular.cli.run import CommandError, argparser, main, parse_binding, run
from tubular.invariants.jinvariant import j_closed_form
import tubular


class MainTest(unittest.TestCase):
    def setUp(self):
        patcher = mock.patch.dict(tubular.conf.values)
        patcher.start()
        self.addCleanup(patcher.stop)

    def invoke(self, *args):
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = main(list(args))
        self.stderr = err.getvalue()
        return code, out.getvalue()

    def report(self, *args):
        code, out = self.invoke(*args)
        return code, Report.from_json(out)

    def test_sphericity(self):
        code, report = self.report('verify-sphericity', '--family', 'St', '--symbolic')
        self.assertEqual(code, 0)
        self.assertEqual(report.verdict, 'verified')
        self.assertEqual(report.residual_terms, 0)
        self.assertEqual(report.command, dict(command='verify-sphericity', family='St', symbolic=True))

    def test_quadric_to_tube(self):
        code, report = self.report('verify-sphericity', '--family', 'QuadricTube', '--k', '2', '--n', '3')
        self.assertEqual(code, 0)

    def test_no_automorphism(self):
        code, report = self.report('verify-sphericity', '--family', 'GenHyper')
        self.assertEqual(code, 2)
        self.assertEqual(report.verdict, 'error')
        self.assertIn('GenHyper', self.stderr)

    def test_j_invariant(self):
        code, report = self.report('j-invariant', '--t', '3')
        self.assertEqual((code, report.values['j']), (0, '9261/8'))
        code, report = self.report('j-invariant', '--t', '-3')
        self.assertEqual(code, 2)
        self.assertIn('singular', report.error)
        code, report = self.report('j-invariant', '--t=-1/2', '--weierstrass')
        self.assertEqual(code, 0)
        self.assertIn('model', report.values)

    def test_j_invariant_symbolic(self):
        code, report = self.report('j-invariant')
        self.assertEqual((code, report.verdict), (0, 'verified'))
        self.assertEqual(report.values['j'], str(j_closed_form(function_field('t').gen('t'))))
        code, report = self.report('j-invariant', '--weierstrass')
        self.assertEqual(code, 0)
        self.assertEqual(report.values['model']['a3'], '1')

    def test_separate_quartics(self):
        code, report = self.report('separate-quartics', '--t1', '2', '--t2', '3')
        self.assertEqual(code, 0)
        self.assertEqual(report.verdict, 'non-equivalent')
        self.assertEqual(report.values['first']['I'], '11/4')
        code, report = self.report('separate-quartics', '--t1', '2', '--t2', '2')
        self.assertEqual((code, report.verdict), (1, 'inconclusive'))

    def test_separate_bases(self):
        params = ['a=1', 'b=1', 'c=1', 'd=1']
        code, report = self.report('separate-bases', '--first', 'GenHyper', 't=2', *params,
                                   '--second', 'GenHyper', 't=3', *params)
        self.assertEqual((code, report.values['witness']), (0, 4))

    def test_signature(self):
        code, report = self.report('signature', '--family', 'Pt', '--t', '2')
        self.assertEqual((code, report.values['signature']), (0, '(5, 2)'))
        code, report = self.report('signature', '--family', 'FrakP', '--at', '-3', '--scan', '--count', '2')
        self.assertEqual(code, 0)
        self.assertEqual(len(report.values['signatures']), 3)

    def test_chi(self):
        code, report = self.report('chi', '--t', '17+12*sqrt(2)')
        self.assertEqual((code, report.values['chi']), (0, '-2'))
        code, report = self.report('chi', '--tau', '-6', '--branch', 'lower')
        self.assertEqual(report.values['t'], '1')
        code, report = self.report('chi', '--t', '1/2')
        self.assertEqual(code, 2)
        code, report = self.report('chi', '--scan', '--hi', '20', '--samples', '10')
        self.assertEqual(code, 0)

    def test_phi_and_reciprocity(self):
        code, report = self.report('phi-scan', '--samples', '20')
        self.assertEqual((code, report.values['phi_prime_at_zero']), (0, '512'))
        self.assertEqual(self.report('reciprocity')[0], 0)
        self.assertEqual(self.report('reciprocity', '--t', '3')[0], 0)
        self.assertEqual(self.report('reciprocity', '--t', '6')[0], 2)

    def test_render(self):
        code, report = self.report('render', 'x1^2 - 2*x2*sqrt(3)')
        self.assertEqual((code, report.values['polynomial']), (0, 'x1^2 - 2*sqrt(3)*x2'))
        code, report = self.report('render', 'x1 + + x2')
        self.assertEqual(code, 2)
        self.assertIn('position 5', report.error)

    def test_families(self):
        code, report = self.report('families')
        self.assertIn('GenHyper', report.values['families'])
        code, report = self.report('families', '--family', 'Pt', '--t', '40')
        self.assertEqual(code, 2)

    def test_text_format(self):
        code, out = self.invoke('--format', 'text', 'families', '--family', 'St')
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[:2], ['families family=St', 'verdict: verified'])

    def test_bad_configuration(self):
        code, out = self.invoke('--conf', 'tubular.cli.run.report_format=yaml', 'families')
        self.assertEqual((code, out), (2, ''))
        code, out = self.invoke('--config', '/no/such/tubular.ini', 'families')
        self.assertEqual(code, 2)

    def test_repeated_conf(self):
        code, out = self.invoke('--conf', 'tubular.cli.run.report_format=text', '--conf', 'tubular.cli.run.seed=3',
                                'families', '--family', 'St')
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[0], 'families family=St')
        self.assertEqual(tubular.conf['tubular.cli.run.seed'], 3)

    def test_usage_error(self):
        with self.assertRaises(SystemExit) as ctx, redirect_stderr(io.StringIO()):
            main(['no-such-command'])
        self.assertEqual(ctx.exception.code, 2)

    def test_report_dir(self):
        with tempfile.TemporaryDirectory() as directory:
            code, out = self.invoke('--conf', 'tubular.cli.run.report_dir=%s' % directory, 'reciprocity')
            with open(os.path.join(directory, 'reciprocity.json')) as f:
                self.assertEqual(json.load(f)['verdict'], 'verified')



class RunTest(unittest.TestCase):
    def test_run(self):
        report = run(argparser.parse_args(['verify-homogeneity', '--family', 'St', '--t', '2', '--count', '2']))
        self.assertEqual(report.verdict, 'verified')
        self.assertEqual(len(report.values['points']), 2)
        self.assertGreaterEqual(report.elapsed_ms, 0)

    def test_trace(self):
        report = run(argparser.parse_args(['trace', '--family', 'St', '--point', '0,0,0,1,2,0']))
        self.assertEqual(report.verdict, 'verified')
        self.assertEqual(report.values['fixes_origin'], True)
        self.assertEqual(report.values['steps'][0].split(':')[0], 'translate')

    def test_parse_binding(self):
        self.assertEqual(parse_binding('n=8'), ('n', 8))
        self.assertEqual(str(parse_binding('t=-1/2')[1]), '-1/2')
        for text in ('t', 'x=1', 't=abc'):
            with self.assertRaises(CommandError):
                parse_binding(text)

    def test_unexpected_error(self):
        def broken(args):
            raise RuntimeError('boom')

        args = argparser.parse_args(['families'])
        args.handler = broken
        with self.assertLogs('tubular.cli.run', 'ERROR'):
            report = run(args)
        self.assertEqual(report.verdict, 'error')
        self.assertEqual(report.error, 'internal error: RuntimeError: boom')
        self.assertEqual(report.exit_code, 2)

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

import io
import logging
import os
import tempfile
import unittest
from unittest import mock

from tubular.util.conf import Config, TUBULAR_ENV_KEY, TUBULAR_CONFIG_FILE_KEY
from tubular.util.exceptions import catch
from tubular.util.log import configure_logging, verbosity_level, TRACE


class ConfTest(unittest.TestCase):
    def test_defaults(self):
        conf = Config(use_environment=False)
        self.assertEqual(conf['tubular.algebra.tower.precision'], 32)
        self.assertEqual(conf['tubular.invariants.chi.samples'], 100)
        self.assertEqual(conf['tubular.cli.run.report_format'], 'json')
        self.assertIsNone(conf['tubular.cli.run.report_dir'])
        self.assertIsNone(conf['tubular.no.such.key'])

    def test_formatting(self):
        conf = Config(use_environment=False)
        conf.update('tubular.invariants.jinvariant.phi_samples=50', ('tubular.geometry.levi.sample_points', '3'))
        self.assertEqual(conf['tubular.invariants.jinvariant.phi_samples'], 50)
        self.assertEqual(conf['tubular.geometry.levi.sample_points'], 3)
        conf['tubular.cli.run.report_format'] = 'yaml'
        with self.assertRaises(ValueError):
            conf['tubular.cli.run.report_format']
        with self.assertRaises(ValueError):
            conf.update('no equals sign')

    def test_ini_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'tubular.ini')
            with open(path, 'w') as f:
                f.write('[tubular.algebra.tower]\nprecision = 64\n')
            conf = Config(use_environment=False).read_file(path)
            self.assertEqual(conf['tubular.algebra.tower.precision'], 64)
            with self.assertRaises(FileNotFoundError):
                conf.read_file(os.path.join(directory, 'missing.ini'))

    def test_environment(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'custom.ini')
            with open(path, 'w') as f:
                f.write('[tubular.invariants.chi]\nsamples = 7\n')
            env = {TUBULAR_CONFIG_FILE_KEY: path, TUBULAR_ENV_KEY: 'tubular.cli.run.seed=4'}
            with mock.patch.dict(os.environ, env):
                conf = Config()
            self.assertEqual(conf['tubular.invariants.chi.samples'], 7)
            self.assertEqual(conf['tubular.cli.run.seed'], 4)



class LogTest(unittest.TestCase):
    def test_verbosity(self):
        self.assertEqual(verbosity_level(0), logging.WARNING)
        self.assertEqual(verbosity_level(2), logging.DEBUG)
        self.assertEqual(verbosity_level(5), TRACE)

    def test_trace(self):
        logger = logging.getLogger('tubular.test')
        with self.assertLogs(logger, TRACE) as logs:
            logger.trace('a %s message', 'trace')
        self.assertEqual(logs.output, ['TRACE:tubular.test:a trace message'])

    def test_catch(self):
        with catch():
            raise ValueError()
        with self.assertRaises(KeyError):
            with catch(ValueError):
                raise KeyError()

    def test_configure_logging(self):
        root = logging.getLogger()
        handlers, level = root.handlers[:], root.level
        stream = io.StringIO()
        try:
            root.handlers = []
            configure_logging(2, stream)
            logging.getLogger('tubular.test').debug('to %s', 'stderr')
            self.assertEqual(root.level, logging.DEBUG)
            self.assertTrue(stream.getvalue().rstrip().endswith('DEBUG   tubular.test: to stderr'))

            # an existing configuration is kept, only its level may drop
            configure_logging(0)
            self.assertEqual(len(root.handlers), 1)
            self.assertEqual(root.level, logging.DEBUG)
        finally:
            root.handlers, root.level = handlers, level

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

import logging


TRACE = 5


def install_trace_logging():
    logging.TRACE = TRACE
    logging.addLevelName(TRACE, 'TRACE')

    def trace(self, message, *args, **kws):
        if self.isEnabledFor(TRACE):
            self._log(TRACE, message, args, **kws)

    logging.Logger.trace = trace


def verbosity_level(verbose):
    '''
    Map a repeat count of a -v flag onto a logging level.
    '''
    return [logging.WARNING, logging.INFO, logging.DEBUG, TRACE][min(verbose, 3)]


LOG_FORMAT = '%(asctime)s %(levelname)-7s %(name)s: %(message)s'


def configure_logging(verbose=0, stream=None):
    '''
    Log to stderr (or stream) at the level for verbose. Reports go to stdout,
    so log records never mix with them. A logging configuration read from
    tubular.logging_conf takes precedence.
    '''
    level = verbosity_level(verbose)
    root = logging.getLogger()
    if root.handlers:
        if verbose:
            root.setLevel(min(root.level, level))
        return root
    handler = logging.StreamHandler(stream)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel(level)
    return root

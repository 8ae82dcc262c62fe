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

import logging.config
import os.path

from tubular.util.conf import Config, String
from tubular.util.log import install_trace_logging


# Expose a global tubular configuration
conf = Config()


# Configure Logging

logging_conf = String('logging.conf', desc='The logging configuration file read at import.')

install_trace_logging()
logging.captureWarnings(True)

if os.path.exists(conf['tubular.logging_conf']):
    logging.config.fileConfig(conf['tubular.logging_conf'], disable_existing_loggers=False)


# tubular version info

__version_info__ = (0, 3, 0)
__version__ = '.'.join(map(str, __version_info__))

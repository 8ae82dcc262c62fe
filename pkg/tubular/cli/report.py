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

import json


SCHEMA = 1

VERIFIED = 'verified'
FAILED = 'failed'
NON_EQUIVALENT = 'non-equivalent'
INCONCLUSIVE = 'inconclusive'
ERROR = 'error'

VERDICTS = (VERIFIED, FAILED, NON_EQUIVALENT, INCONCLUSIVE, ERROR)

EXIT_CODES = {
    VERIFIED: 0,
    NON_EQUIVALENT: 0,
    FAILED: 1,
    INCONCLUSIVE: 1,
    ERROR: 2,
}


def plain(value):
    '''
    A JSON compatible rendition of a value: exact numbers and algebraic
    objects become their canonical text.
    '''
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, dict):
        return {str(key): plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(item) for item in value]
    return str(value)



class Report(object):
    '''
    The outcome of one command: the command echo, a verdict, exact values
    rendered canonically, the residual term count of verifications and the
    elapsed time. Only the elapsed time varies between runs.
    '''

    def __init__(self, command, verdict, values=None, residual_terms=None, error=None, elapsed_ms=0.0):
        if verdict not in VERDICTS:
            raise ValueError('Unknown verdict %r, use one of %s' % (verdict, ', '.join(VERDICTS)))
        self.command = plain(command)
        self.verdict = verdict
        self.values = plain(values or {})
        self.residual_terms = residual_terms
        self.error = error
        self.elapsed_ms = elapsed_ms


    @property
    def exit_code(self):
        return EXIT_CODES[self.verdict]


    def payload(self):
        return {
            'schema': SCHEMA,
            'command': self.command,
            'verdict': self.verdict,
            'values': self.values,
            'residual_terms': self.residual_terms,
            'error': self.error,
        }


    def to_json(self):
        document = self.payload()
        document['elapsed_ms'] = self.elapsed_ms
        return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False)


    @classmethod
    def from_json(cls, text):
        document = json.loads(text)
        if document.get('schema') != SCHEMA:
            raise ValueError('Unsupported report schema %r' % document.get('schema'))
        return cls(document['command'], document['verdict'], document['values'],
                   document['residual_terms'], document['error'], document['elapsed_ms'])


    def to_text(self):
        args = ' '.join('%s=%s' % (key, value) for key, value in sorted(self.command.items())
                        if key != 'command')
        lines = ['%s %s' % (self.command.get('command', ''), args), 'verdict: %s' % self.verdict]
        if self.residual_terms is not None:
            lines.append('residual terms: %d' % self.residual_terms)
        for key, value in sorted(self.values.items()):
            if isinstance(value, list):
                lines.append('%s:' % key)
                lines.extend('  %s' % item for item in value)
            elif isinstance(value, dict):
                lines.append('%s:' % key)
                lines.extend('  %s: %s' % item for item in sorted(value.items()))
            else:
                lines.append('%s: %s' % (key, value))
        if self.error:
            lines.append('error: %s' % self.error)
        lines.append('elapsed: %.1f ms' % self.elapsed_ms)
        return '\n'.join(line.rstrip() for line in lines)


    def render(self, fmt='json'):
        return self.to_json() if fmt == 'json' else self.to_text()


    def __eq__(self, other):
        return isinstance(other, Report) and self.payload() == other.payload()


    def __repr__(self):
        return '<Report %s: %s>' % (self.command.get('command'), self.verdict)

# parameters.py - OrbifoldBench - the settings of one command line run

# Copyright (c) 2024 Coburn Wightman
# AGPL-3.0-or-later

import os

from OrbifoldBench.core.errors import ValidationError

COMMANDS = ('sectors', 'cohomology', 'ring', 'verify')
FORMATS = ('table', 'json')


class RunConfig(object):
    """
    The input, command and output choices of a single run, checked before
    any computation starts.
    """

    def __init__(self, command, input_path, output_format='table', oracle_path=None, out_path=None, verbosity=0):
        """

        Args:
            command (str): one of COMMANDS
            input_path (str): yaml or json input document
            output_format (str): 'table' or 'json'
            oracle_path (str): optional Euler oracle document
            out_path (str): write the report here instead of stdout
            verbosity (int): 0 warnings, 1 info, 2 or more debug
        """
        self._command = command
        self._input_path = input_path
        self._output_format = output_format
        self._oracle_path = oracle_path
        self._out_path = out_path
        self._verbosity = verbosity

        self.validate()
        return

    @classmethod
    def from_arguments(cls, args):
        return cls(args.command, args.input, args.format, args.oracle, args.out, args.verbose)

    def validate(self):
        if self._command not in COMMANDS:
            raise ValidationError('unknown command {!r}, expected one of {}'.format(
                self._command, ', '.join(COMMANDS)), 'command')

        if self._output_format not in FORMATS:
            raise ValidationError('unknown format {!r}, expected table or json'.format(self._output_format),
                                  'format')

        if not os.path.isfile(self._input_path):
            raise ValidationError('no such input file {}'.format(self._input_path), 'input')

        if self._oracle_path is not None and not os.path.isfile(self._oracle_path):
            raise ValidationError('no such oracle file {}'.format(self._oracle_path), 'oracle')

        return

    @property
    def command(self):
        return self._command

    @property
    def input_path(self):
        return self._input_path

    @property
    def output_format(self):
        return self._output_format

    @property
    def oracle_path(self):
        return self._oracle_path

    @property
    def out_path(self):
        return self._out_path

    @property
    def verbosity(self):
        return self._verbosity

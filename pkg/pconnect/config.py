#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# import modules
from .constants import *


class RunConfig(object):
    """
    RunConfig encapsulates the settings of a single command run.

    Attributes:

        input: str or None
            Input document path.

        command: str or None
            Command name, one of pconnect.COMMANDS.

        precision: int
            Novikov precision, number of known coefficients.

        format: str
            Output format as pconnect.HUMAN or pconnect.JSON.

        reference: str or None
            Path of a classical connection matrix document.

        levels: int
            Highest level of the truncation tower.

        output: str or None
            Path of the JSON artifact written by 'assemble'.

        verbose: bool
            Enables debug logging.
    """


    def __init__(self, attributes={}, **attrs):
        """Initializes a new instance of pconnect.RunConfig."""

        self.input = None
        self.command = None

        self.precision = DEFAULT_PRECISION
        self.format = HUMAN
        self.reference = None
        self.levels = DEFAULT_LEVELS
        self.output = None
        self.verbose = False

        # combine attributes
        attributes = dict(attributes, **attrs)

        # assign known attributes
        for name, value in attributes.items():
            if hasattr(self, name):
                setattr(self, name, value)
            else:
                message = "RunConfig attribute not found! -> '%s'" % name
                raise AttributeError(message)


    def __str__(self):
        """Gets standard string representation."""

        label = "%s %s" % (self.command, self.input)
        label += " precision:%d format:%s" % (self.precision, self.format)

        if self.command == 'tower':
            label += " levels:%d" % self.levels

        if self.reference is not None:
            label += " reference:%s" % self.reference

        return label


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.__str__())


    def __eq__(self, other):
        """Equal operator."""

        if self is other:
            return True

        if not isinstance(other, RunConfig):
            return False

        return self.to_dict() == other.to_dict()


    def __ne__(self, other):
        """Not equal operator."""

        return not self.__eq__(other)


    def to_dict(self):
        """Gets settings as dict."""

        return {
            'input': self.input,
            'command': self.command,
            'precision': self.precision,
            'format': self.format,
            'reference': self.reference,
            'levels': self.levels,
            'output': self.output,
            'verbose': self.verbose}


    def validate(self):
        """
        Checks the settings.

        Returns:
            pconnect.RunConfig
                Self for chaining.
        """

        if self.command not in COMMANDS:
            message = "Unknown command! -> '%s'" % self.command
            raise ValueError(message)

        if self.format not in (HUMAN, JSON):
            message = "Unknown output format! -> '%s'" % self.format
            raise ValueError(message)

        if isinstance(self.precision, bool) or not isinstance(self.precision, int) or self.precision < 1:
            message = "Precision must be a positive integer! -> %s" % (self.precision,)
            raise ValueError(message)

        if isinstance(self.levels, bool) or not isinstance(self.levels, int) or self.levels < 0:
            message = "Tower level must be non-negative! -> %s" % (self.levels,)
            raise ValueError(message)

        return self

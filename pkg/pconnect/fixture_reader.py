#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# import modules
import os.path
from .constants import *
from .codec import load_document, require
from .errors import SchemaError


class FixtureReader(object):
    """
    FixtureReader represents a base class for all the document readers.

    Attributes:
        path: str
            Current document path.
    """


    def __init__(self, path):
        """
        Initializes a new instance of pconnect.FixtureReader.

        Args:
            path: str
                Path of the JSON document to be loaded.
        """

        # check path
        if not os.path.exists(path):
            message = "File not found! -> '%s'" % path
            raise IOError(message)

        # set path
        self._path = path
        self._data = None


    def __enter__(self):
        """Opens specified path within 'with' statement."""

        self.open()
        return self


    def __exit__(self, exc_ty, exc_val, tb):
        """Closes opened path when 'with' statement ended."""

        self.close()


    @property
    def path(self):
        """
        Gets document path.

        Returns:
            str
                Current document path.
        """

        return self._path


    @property
    def kind(self):
        """Gets document kind this reader accepts."""

        return None


    def open(self):
        """Reads and checks the document."""

        if self._data is None:
            self._data = load_document(self._path)

            kind = require(self._data, 'kind', '$')
            if self.kind is not None and kind != self.kind:
                message = "Unexpected document kind! -> '%s' instead of '%s'" % (kind, self.kind)
                raise SchemaError(message, location='kind')

        return self


    def close(self):
        """Releases the parsed document."""

        self._data = None


    def document(self):
        """
        Gets parsed JSON document.

        Returns:
            dict
                Document data.
        """

        self.open()
        return self._data


    def load(self, **kwargs):
        """
        Creates domain object from document.

        This is just an abstract method, which must be overridden in all derived
        classes to get the data.

        Returns:
            ?
                Domain object.
        """

        message = "The 'load(self)' method is not implemented for this class. -> %s" % self.__class__.__name__
        raise NotImplementedError(message)


    def decomposition(self, **kwargs):
        """
        Gets p-Morse decomposition described by the document.

        This is just an abstract method, which must be overridden in all derived
        classes able to provide decompositions.

        Returns:
            pconnect.MorseDecomposition
                Decomposition.
        """

        message = "The 'decomposition(self)' method is not implemented for this class. -> %s" % self.__class__.__name__
        raise NotImplementedError(message)


    def summary(self, show=True):
        """
        Gets information summary of the document.

        Args:
            show: bool
                If set to True, the summary will be printed immediately.

        Returns:
            dict
                Summary dictionary.
        """

        data = self.document()

        # init summary
        summary = {
            'kind': data.get('kind', None),
            'name': data.get('name', None),
            'schema_version': data.get('schema_version', None)}

        summary.update(self._summary())

        # show summary
        if show:
            print("Document: %s | %s" % (summary['kind'], summary['name']))
            for key in sorted(summary):
                if key not in ('kind', 'name', 'schema_version'):
                    print("\t%s: %s" % (key.replace('_', ' ').title(), summary[key]))

        return summary


    def _summary(self):
        """Gets kind specific summary items."""

        return {}

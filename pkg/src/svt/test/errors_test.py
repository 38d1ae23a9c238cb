import sys
import unittest
from .. import errors
from ..errors import MixedParity, SvtError, UnknownSuite


class ErrorsTest(unittest.TestCase):
    __tags__ = ["errors"]

    def test_SvtError(self):
        error = SvtError("boom")
        self.assertEqual(error.msg, "boom")
        self.assertEqual(str(error), "boom")
        self.assertEqual(str(SvtError()), "Base class of all svt specific "
                         "exceptions.")

    def test_default_message(self):
        self.assertEqual(str(MixedParity()),
                         "An element is not Z2-homogeneous.")
        self.assertEqual(str(UnknownSuite("no such suite")), "no such suite")

    def test_hierarchy(self):
        for name in errors.__all__:
            cls = getattr(errors, name)
            self.assertTrue(issubclass(cls, SvtError), name)
            self.assertTrue(str(cls()))


if __name__ == '__main__':
    sys.exit(unittest.main())

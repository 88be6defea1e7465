import unittest

from schreier.counting.params import ParameterError
from schreier.verify.lemmas import LemmaHypothesisError, lemma1_count, lemma2_boundary_holds, lemma2_holds


class TestLemma1(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(lemma1_count(1, 4), 1)
        self.assertEqual(lemma1_count(5, 2), 3)
        self.assertEqual(lemma1_count(6, 2), 3)

    def test_counts_numbered_positions(self):
        for q in range(1, 10):
            for N in range(1, 60):
                numbered_one = sum(1 for i in range(N) if i % q == 0)
                self.assertEqual(lemma1_count(N, q), numbered_one)

    def test_rejects_zero(self):
        with self.assertRaises(ParameterError):
            lemma1_count(0, 2)


class TestLemma2(unittest.TestCase):

    def test_holds_everywhere(self):
        for p in range(1, 21):
            for q in range(1, 21):
                for k in range(1, (p - 1) * q + 1):
                    self.assertTrue(lemma2_holds(k, p, q), (k, p, q))

    def test_boundary_holds_everywhere(self):
        for p in range(1, 21):
            for q in range(1, 21):
                for k in range((p - 1) * q + 1, p * q + 1):
                    self.assertTrue(lemma2_boundary_holds(k, p, q), (k, p, q))

    def test_outside_hypothesis(self):
        with self.assertRaises(LemmaHypothesisError):
            lemma2_holds(3, 2, 2)
        with self.assertRaises(LemmaHypothesisError):
            lemma2_holds(1, 1, 5)
        with self.assertRaises(LemmaHypothesisError):
            lemma2_boundary_holds(2, 2, 2)
        with self.assertRaises(LemmaHypothesisError):
            lemma2_boundary_holds(5, 2, 2)

    def test_hypothesis_error_is_parameter_error(self):
        with self.assertRaises(ParameterError):
            lemma2_holds(0, 2, 2)
        self.assertTrue(issubclass(LemmaHypothesisError, ParameterError))


if __name__ == '__main__':
    unittest.main()

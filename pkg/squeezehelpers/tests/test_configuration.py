import unittest

from squeezehelpers import configuration


class ConfigurationTestCase(unittest.TestCase):
    def tearDown(self):
        configuration.set_target_profile('default')

    def test_defaults(self):
        self.assertAlmostEqual(configuration.step, 1e-4)
        self.assertAlmostEqual(configuration.scan_step, 1e-3)
        self.assertAlmostEqual(configuration.shadow_probability, 0.999)
        self.assertFalse(configuration.parallel)

    def test_target_profile(self):
        configuration.set_target_profile('draft')
        self.assertAlmostEqual(configuration.step, 1e-3)
        self.assertAlmostEqual(configuration.scan_step, 1e-2)
        configuration.set_target_profile('reference')
        self.assertAlmostEqual(configuration.scan_step, 1e-4)
        self.assertAlmostEqual(configuration.root_tolerance, 1e-10)

        with self.assertRaises(AssertionError):
            configuration.set_target_profile('fast')

    def test_validation(self):
        with self.assertRaises(AssertionError):
            configuration.step = 0
        with self.assertRaises(AssertionError):
            configuration.singularity_window = 0.5

    def test_as_dict(self):
        settings = configuration.as_dict()
        self.assertEqual(settings['step'], configuration.step)
        self.assertIn('det_tolerance', settings)

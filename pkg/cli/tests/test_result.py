import json
import math

import numpy as np
from django.test import SimpleTestCase

from cli.result import CommandResult


class CommandResultTest(SimpleTestCase):

    def test_ok_carries_report_and_manifest(self):
        result = CommandResult.ok('bounds', {'entries': []}, {'seed': 7}, message='3 bound entries')
        body = json.loads(result.to_json())

        self.assertEqual(body, {
            'success': True,
            'command': 'bounds',
            'message': '3 bound entries',
            'report': {'entries': []},
            'manifest': {'seed': 7},
        })

    def test_fail_carries_exit_code_and_type(self):
        body = CommandResult.fail('exact', 'Unknown quantity: x', 1, 'UnknownOptionException').to_dict()

        self.assertFalse(body['success'])
        self.assertNotIn('report', body)
        self.assertEqual(body['errors'], {'exit_code': 1, 'type': 'UnknownOptionException'})
        self.assertEqual(CommandResult.fail('exact', 'singular', 2).to_dict()['errors'], {'exit_code': 2})

    def test_numpy_values_are_converted(self):
        report = {'value': np.float64(0.1), 'count': np.int64(3), 'w': np.array([1.0, 2.5])}
        body = json.loads(CommandResult.ok('bounds', report, {}).to_json())

        self.assertEqual(body['report'], {'value': 0.1, 'count': 3, 'w': [1.0, 2.5]})

    def test_non_finite_values_are_refused(self):
        for value in (math.nan, math.inf, np.float64('nan')):
            with self.assertRaises(ValueError):
                CommandResult.ok('bounds', {'value': value}, {}).to_json()

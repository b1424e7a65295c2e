import json


def _plain(value):
    if hasattr(value, 'item'):
        return value.item()
    if hasattr(value, 'tolist'):
        return value.tolist()
    raise TypeError(f"{type(value).__name__} is not JSON serializable")


class CommandResult:

    def __init__(self, success, command, report=None, manifest=None, message=None, exit_code=0, error_type=None):
        self.success = success
        self.command = command
        self.report = report
        self.manifest = manifest
        self.message = message
        self.exit_code = exit_code
        self.error_type = error_type

    @classmethod
    def ok(cls, command, report, manifest, message=None):
        return cls(success=True, command=command, report=report, manifest=manifest, message=message)

    @classmethod
    def fail(cls, command, message, exit_code, error_type=None):
        return cls(success=False, command=command, message=message, exit_code=exit_code, error_type=error_type)

    def to_dict(self):
        result = {'success': self.success, 'command': self.command}

        if self.message:
            result['message'] = self.message

        if self.success:
            result['report'] = self.report
            result['manifest'] = self.manifest
        else:
            errors = {'exit_code': self.exit_code}
            if self.error_type:
                errors['type'] = self.error_type
            result['errors'] = errors

        return result

    def to_json(self):
        """Floats use the shortest repr that round-trips; NaN and infinity are refused."""
        return json.dumps(self.to_dict(), indent=2, allow_nan=False, default=_plain)

class ManifestMapper:

    @staticmethod
    def to_dict(manifest):
        return {
            'command': manifest.command,
            'inputs': dict(manifest.inputs),
            'seed': manifest.seed,
            'version': manifest.version,
            'timestamp': manifest.timestamp,
            'outputs': list(manifest.outputs),
            'options': dict(manifest.options),
        }

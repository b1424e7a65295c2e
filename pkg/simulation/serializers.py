from rest_framework import serializers

from graphs.serializers import VectorSerializer

MIN_TRIALS = 1000


class ExperimentConfigSerializer(serializers.Serializer):
    """Concentration experiment: model source, observable g, horizon t, thresholds r."""

    model = serializers.CharField()
    g = serializers.JSONField()
    t = serializers.FloatField(min_value=0.0)
    r = serializers.ListField(child=serializers.FloatField(min_value=0.0), allow_empty=False)
    trials = serializers.IntegerField(min_value=MIN_TRIALS)
    seed = serializers.IntegerField(required=False, min_value=0)
    nu = serializers.JSONField(required=False)
    start = serializers.CharField(required=False)
    cG_upper = serializers.FloatField(required=False, min_value=0.0)
    metric = serializers.ChoiceField(choices=['graph', 'discrete'], required=False, default='graph')

    def validate_g(self, value):
        VectorSerializer().validate_values(value)
        return value

    def validate_nu(self, value):
        VectorSerializer().validate_values(value)
        return value

    def validate_t(self, value):
        if value <= 0:
            raise serializers.ValidationError("t must be positive")
        return value

    def validate_r(self, value):
        if any(r <= 0 for r in value):
            raise serializers.ValidationError("Every threshold r must be positive")
        return value

    def validate_cG_upper(self, value):
        if value <= 0:
            raise serializers.ValidationError("cG_upper must be positive")
        return value

    def validate(self, attrs):
        if 'nu' in attrs and 'start' in attrs:
            raise serializers.ValidationError("Give either nu or start, not both")
        return attrs

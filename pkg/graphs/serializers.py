from rest_framework import serializers


class EdgeSerializer(serializers.Serializer):
    u = serializers.CharField()
    v = serializers.CharField()
    q_uv = serializers.FloatField(required=False)
    q_vu = serializers.FloatField(required=False)


class GraphFileSerializer(serializers.Serializer):
    vertices = serializers.ListField(child=serializers.CharField(), allow_empty=False)
    edges = EdgeSerializer(many=True)
    laplacian = serializers.BooleanField(required=False, default=False)

    def validate_vertices(self, value):
        if len(set(value)) != len(value):
            raise serializers.ValidationError("Vertex labels must be unique")
        return value

    def validate(self, attrs):
        known = set(attrs['vertices'])
        for edge in attrs['edges']:
            for end in (edge['u'], edge['v']):
                if end not in known:
                    raise serializers.ValidationError(f"Edge endpoint {end} is not a vertex")
            if not attrs['laplacian'] and ('q_uv' not in edge or 'q_vu' not in edge):
                raise serializers.ValidationError(
                    f"Edge ({edge['u']}, {edge['v']}) needs q_uv and q_vu unless laplacian is true"
                )
        return attrs


class PathEntrySerializer(serializers.Serializer):
    vertices = serializers.ListField(child=serializers.CharField(), min_length=2)

    def to_internal_value(self, data):
        # "from" is a Python keyword, so the endpoints are read by hand.
        attrs = super().to_internal_value(data)
        for key in ('from', 'to'):
            if key not in data:
                raise serializers.ValidationError({key: "This field is required."})
            attrs[key] = str(data[key])
        return attrs


class PathFileSerializer(serializers.Serializer):
    paths = PathEntrySerializer(many=True, allow_empty=False)


class VectorSerializer(serializers.Serializer):
    """A vector over vertices: a list in vertex order or an object keyed by label."""

    values = serializers.JSONField()

    def validate_values(self, value):
        if isinstance(value, dict):
            items = value.values()
        elif isinstance(value, list):
            items = value
        else:
            raise serializers.ValidationError("Expected a list or an object keyed by vertex label")
        for item in items:
            if isinstance(item, bool) or not isinstance(item, (int, float)):
                raise serializers.ValidationError(f"Not a number: {item!r}")
        return value


class WeightSerializer(serializers.Serializer):
    u = serializers.CharField()
    v = serializers.CharField()
    w = serializers.FloatField()

    def validate_w(self, value):
        if not value > 0:
            raise serializers.ValidationError("Edge lengths must be positive")
        return value


class LengthFunctionSerializer(serializers.Serializer):
    """Length function file: {"weights": [{"u", "v", "w"}]}, one entry per non-oriented edge."""

    weights = WeightSerializer(many=True, allow_empty=False)

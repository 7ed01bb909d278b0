from functools import reduce

import sympy
from django.conf import settings
from rest_framework import serializers

from . import arrangement as arr
from .curve import DEFAULT_MAX_TOTAL_WEIGHT, FanCurve, FanMorphism
from .lattice import LatticeSimplexN
from .planefan import DegreeOneFrame, build
from .surface import Triangulation3, regular_subdivision

SCHEMA_VERSION = 1


def tropical_setting(name, default):
    return getattr(settings, "TROPICAL", {}).get(name, default)


def check_total_weight(weighted):
    """Σ w·content(v) over the pairs, the weight the curve ends up with."""
    limit = tropical_setting("MAX_TOTAL_WEIGHT", DEFAULT_MAX_TOTAL_WEIGHT)
    total = sum(w * max(reduce(sympy.igcd, v, 0), 1) for w, v in weighted)
    if total > limit:
        raise serializers.ValidationError(f"Total weight {total} exceeds the limit of {limit}.")


class RationalField(serializers.Field):
    """An integer or a "p/q" string, held as a sympy Rational."""
    default_error_messages = {"invalid": "Expected an integer or a 'p/q' string, got {value!r}."}

    def to_internal_value(self, data):
        if isinstance(data, bool) or not isinstance(data, (int, str)):
            self.fail("invalid", value=data)
        try:
            value = sympy.Rational(data)
        except (TypeError, ValueError, SyntaxError):
            self.fail("invalid", value=data)
        if not isinstance(value, sympy.Rational):
            self.fail("invalid", value=data)
        return value

    def to_representation(self, value):
        return int(value.p) if value.q == 1 else f"{value.p}/{value.q}"


class VersionedSerializer(serializers.Serializer):
    schema = serializers.IntegerField()

    def validate_schema(self, value):
        if value != SCHEMA_VERSION:
            raise serializers.ValidationError(f"Unsupported schema version {value}, expected 1.")
        return value


def integer_rows(**kwargs):
    return serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()), **kwargs)


class FrameSerializer(VersionedSerializer):
    simplex = integer_rows(min_length=2)
    binding = serializers.ListField(child=serializers.IntegerField(), required=False)

    def create(self, validated_data):
        return DegreeOneFrame.build(
            LatticeSimplexN(validated_data["simplex"]), validated_data.get("binding")
        )


class IncidenceSerializer(serializers.Serializer):
    n_lines = serializers.IntegerField(min_value=3)
    points = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField(min_value=0), min_length=3),
        required=False, default=list,
    )


class PlaneSerializer(VersionedSerializer):
    """
    A line arrangement, given by explicit lines or by its multiple points,
    with an optional degree-1 frame. ``create`` returns the plane fan.
    """
    lines = serializers.ListField(
        child=serializers.ListField(child=RationalField(), min_length=3, max_length=3),
        required=False,
    )
    incidence = IncidenceSerializer(required=False)
    simplex = integer_rows(required=False)
    binding = serializers.ListField(child=serializers.IntegerField(), required=False)

    def validate(self, attrs):
        if ("lines" in attrs) == ("incidence" in attrs):
            raise serializers.ValidationError("Give exactly one of 'lines' and 'incidence'.")
        if "binding" in attrs and "simplex" not in attrs:
            raise serializers.ValidationError({"binding": "A binding needs a 'simplex'."})
        return attrs

    def create(self, validated_data):
        if "lines" in validated_data:
            arrangement = arr.from_lines(validated_data["lines"])
        else:
            incidence = validated_data["incidence"]
            arrangement = arr.from_incidence(incidence["n_lines"], incidence["points"])
        frame = validated_data.get("frame")
        if frame is None and "simplex" in validated_data:
            frame = DegreeOneFrame.build(
                LatticeSimplexN(validated_data["simplex"]), validated_data.get("binding")
            )
        if frame is None:
            frame = DegreeOneFrame.standard(arrangement.n_lines - 1)
        return build(arrangement, frame)


class RaySerializer(serializers.Serializer):
    w = serializers.IntegerField(min_value=1)
    v = serializers.ListField(child=serializers.IntegerField(), min_length=2)


class EdgeSerializer(serializers.Serializer):
    w = serializers.IntegerField(min_value=1)
    u = serializers.ListField(child=serializers.IntegerField(), min_length=2)


class CurveSerializer(VersionedSerializer):
    rays = RaySerializer(many=True)

    def validate_rays(self, value):
        if len(value) < 2:
            raise serializers.ValidationError("A curve needs at least two rays.")
        if len({len(ray["v"]) for ray in value}) != 1:
            raise serializers.ValidationError("Ray directions have different dimensions.")
        check_total_weight((ray["w"], ray["v"]) for ray in value)
        return value

    def create(self, validated_data):
        return FanCurve.from_rays((ray["w"], ray["v"]) for ray in validated_data["rays"])


class MorphismSerializer(VersionedSerializer):
    edges = EdgeSerializer(many=True)

    def validate_edges(self, value):
        if len(value) < 2:
            raise serializers.ValidationError("A morphism needs at least two edges.")
        if len({len(edge["u"]) for edge in value}) != 1:
            raise serializers.ValidationError("Edge directions have different dimensions.")
        check_total_weight((edge["w"], edge["u"]) for edge in value)
        return value

    def create(self, validated_data):
        return FanMorphism.from_edges((edge["w"], edge["u"]) for edge in validated_data["edges"])


class TriangulationSerializer(VersionedSerializer):
    d = serializers.IntegerField(min_value=1)
    cells = serializers.ListField(
        child=serializers.ListField(
            child=serializers.ListField(child=serializers.IntegerField(), min_length=3, max_length=3),
            min_length=4, max_length=4,
        ),
        required=False,
    )
    lifts = serializers.DictField(child=RationalField(), required=False)

    def validate_lifts(self, value):
        parsed = {}
        for key, lift in value.items():
            try:
                point = tuple(int(part) for part in key.split(","))
            except ValueError:
                raise serializers.ValidationError(f"Key {key!r} is not of the form 'x,y,z'.")
            if len(point) != 3:
                raise serializers.ValidationError(f"Key {key!r} is not of the form 'x,y,z'.")
            parsed[point] = lift
        return parsed

    def validate(self, attrs):
        if ("cells" in attrs) == ("lifts" in attrs):
            raise serializers.ValidationError("Give exactly one of 'cells' and 'lifts'.")
        if "lifts" in attrs:
            limit = tropical_setting("SUBDIVISION_MAX_DEGREE", 4)
        else:
            limit = tropical_setting("SCAN_MAX_DEGREE", 12)
        if attrs["d"] > limit:
            raise serializers.ValidationError({"d": f"Degree {attrs['d']} exceeds the limit {limit}."})
        return attrs

    def create(self, validated_data):
        if "lifts" in validated_data:
            return regular_subdivision(validated_data["d"], validated_data["lifts"])
        return Triangulation3.from_cells(validated_data["d"], validated_data["cells"])


class JobSerializer(serializers.Serializer):
    """
    Documents of one subcommand keyed by flag name. ``save()`` returns the
    domain objects under the same keys, the plane built with the optional
    frame override.
    """

    def create(self, validated_data):
        frame = validated_data.get("frame")
        if frame is not None:
            frame = self.fields["frame"].create(frame)
        built = {}
        for name, value in validated_data.items():
            field = self.fields[name]
            if name == "frame" or not isinstance(field, serializers.BaseSerializer):
                built[name] = value
            elif name == "plane":
                built[name] = field.create({**value, "frame": frame})
            else:
                built[name] = field.create(value)
        built.pop("frame", None)
        return built


class IntersectSerializer(JobSerializer):
    plane = PlaneSerializer()
    frame = FrameSerializer(required=False)
    a = CurveSerializer()
    b = CurveSerializer()


class CurveJobSerializer(JobSerializer):
    plane = PlaneSerializer()
    frame = FrameSerializer(required=False)
    curve = CurveSerializer()


class HessianSerializer(JobSerializer):
    plane = PlaneSerializer()
    frame = FrameSerializer(required=False)
    morphism = MorphismSerializer(required=False)
    curve = CurveSerializer(required=False)

    def validate(self, attrs):
        if ("morphism" in attrs) == ("curve" in attrs):
            raise serializers.ValidationError("Give exactly one of 'morphism' and 'curve'.")
        return attrs


class RHSerializer(JobSerializer):
    d = serializers.IntegerField(min_value=1)
    k = serializers.IntegerField(min_value=2, required=False)
    l = serializers.IntegerField(min_value=0, required=False)
    genus = serializers.IntegerField(min_value=0, default=0)
    plane = PlaneSerializer(required=False)
    frame = FrameSerializer(required=False)
    morphism = MorphismSerializer(required=False)

    def validate(self, attrs):
        direct = "k" in attrs and "l" in attrs
        derived = "plane" in attrs and "morphism" in attrs
        if direct == derived:
            raise serializers.ValidationError(
                "Give either 'k' and 'l', or a 'plane' with a 'morphism'."
            )
        return attrs


class SurfaceScanSerializer(JobSerializer):
    triangulation = TriangulationSerializer()


class SurfaceSubdivideSerializer(JobSerializer):
    triangulation = TriangulationSerializer()

    def validate_triangulation(self, value):
        if "lifts" not in value:
            raise serializers.ValidationError("Subdivision needs 'lifts'.")
        return value


JOB_SERIALIZERS = {
    "intersect": IntersectSerializer,
    "self-intersect": CurveJobSerializer,
    "degree": CurveJobSerializer,
    "adjunction": CurveJobSerializer,
    "hessian": HessianSerializer,
    "rh": RHSerializer,
    "classify": CurveJobSerializer,
    "surface-scan": SurfaceScanSerializer,
    "surface-subdivide": SurfaceSubdivideSerializer,
}

from drf_spectacular.types import OpenApiTypes
from drf_spectacular.utils import extend_schema
from rest_framework.permissions import AllowAny
from rest_framework.response import Response
from rest_framework.views import APIView

from . import serializers
from .mixins import TropicalErrorMixin
from .reports import compute


class JobAPIView(TropicalErrorMixin, APIView):
    """
    Runs one ``fan`` subcommand on the posted documents and returns its
    machine report. The body holds the documents under the command's flag
    names.
    """
    permission_classes = [AllowAny]
    subcommand = None

    @extend_schema(responses=OpenApiTypes.OBJECT)
    def post(self, request):
        report = compute(self.subcommand, request.data)
        return Response(report.data())


class IntersectAPIView(JobAPIView):
    """Intersection number of the curves ``a`` and ``b`` in ``plane``."""
    subcommand = "intersect"
    serializer_class = serializers.IntersectSerializer


class SelfIntersectAPIView(JobAPIView):
    subcommand = "self-intersect"
    serializer_class = serializers.CurveJobSerializer


class DegreeAPIView(JobAPIView):
    subcommand = "degree"
    serializer_class = serializers.CurveJobSerializer


class AdjunctionAPIView(JobAPIView):
    """Adjunction bound B; negative values obstruct every approximation."""
    subcommand = "adjunction"
    serializer_class = serializers.CurveJobSerializer


class HessianAPIView(JobAPIView):
    """
    Hessian bound H of a morphism (or of a curve read as its own
    morphism). The image must be irreducible of degree at least 2.
    """
    subcommand = "hessian"
    serializer_class = serializers.HessianSerializer


class RHAPIView(JobAPIView):
    """
    Riemann-Hurwitz genus bound, from ``k`` and ``l`` directly or from a
    plane of half-planes and a morphism.
    """
    subcommand = "rh"
    serializer_class = serializers.RHSerializer


class ClassifyAPIView(JobAPIView):
    subcommand = "classify"
    serializer_class = serializers.CurveJobSerializer


class SurfaceScanAPIView(JobAPIView):
    """Pathological cells, pairs and line verdicts of a triangulation of Δ_d."""
    subcommand = "surface-scan"
    serializer_class = serializers.SurfaceScanSerializer


class SurfaceSubdivideAPIView(JobAPIView):
    subcommand = "surface-subdivide"
    serializer_class = serializers.SurfaceSubdivideSerializer

# stable/serializers.py

from rest_framework import serializers

from lgroup.serializers import WeightTripleField

from .quiver import build_quiver
from .tilting import (
    DERIVED_EQUIVALENT,
    UNSUPPORTED_HOM,
    TiltingKind,
    check_extension_free,
    end_dimension,
    summands_pairwise_distinct,
)


class TiltingReportSerializer(serializers.Serializer):
    weights = WeightTripleField()
    kind = serializers.CharField()
    summands = serializers.SerializerMethodField()
    pairwise_distinct = serializers.BooleanField()
    extension_free = serializers.BooleanField(allow_null=True)
    violations = serializers.SerializerMethodField()
    vertices = serializers.SerializerMethodField()
    arrows = serializers.SerializerMethodField()
    relations = serializers.SerializerMethodField()
    end_dim = serializers.IntegerField(allow_null=True)
    derived_equivalent = serializers.ListField(child=serializers.CharField())
    note = serializers.CharField(allow_null=True)

    @classmethod
    def collect(cls, tilting):
        """The report dict for a tilting object; grids get the Ext scan, quiver and End-dimension."""
        report = {
            'weights': tilting.weights,
            'kind': tilting.kind.value,
            'tilting': tilting,
            'pairwise_distinct': summands_pairwise_distinct(tilting),
            'extension_free': None,
            'certificate': None,
            'quiver': None,
            'end_dim': None,
            'derived_equivalent': [kind.value for kind in DERIVED_EQUIVALENT] if tilting.weights.p1 == 2 else [],
            'note': None,
        }
        if tilting.kind == TiltingKind.CUB:
            report['note'] = UNSUPPORTED_HOM
            return report
        certificate = check_extension_free(tilting)
        report.update(
            certificate=certificate,
            extension_free=certificate.extension_free,
            end_dim=end_dimension(tilting),
        )
        if certificate.extension_free:
            report['quiver'] = build_quiver(tilting)
        return report

    def get_summands(self, obj):
        tilting = obj['tilting']
        return [
            {'vertex': tilting.vertex_name(n), 'bundle': str(e)}
            for n, e in enumerate(tilting.summands)
        ]

    def get_violations(self, obj):
        certificate = obj['certificate']
        if certificate is None:
            return []
        return [
            {'source': list(source), 'target': list(target), 'degree': degree}
            for source, target, degree in certificate.violations
        ]

    def get_vertices(self, obj):
        quiver = obj['quiver']
        return [quiver.vertex_name(v) for v in quiver.vertices] if quiver else []

    def get_arrows(self, obj):
        quiver = obj['quiver']
        if not quiver:
            return []
        return [
            {'source': quiver.vertex_name(a.source), 'target': quiver.vertex_name(a.target), 'label': a.label}
            for a in quiver.arrows
        ]

    def get_relations(self, obj):
        quiver = obj['quiver']
        return quiver.relation_texts() if quiver else []

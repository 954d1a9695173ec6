# bundles/serializers.py

from rest_framework import serializers

from k0.grothendieck import extension_bundle_class
from k0.serializers import K0ClassSerializer
from lgroup.exceptions import ElementSyntaxError, InvalidInteriorError
from lgroup.parsing import parse_element
from lgroup.serializers import WeightTripleField

from .extension import (
    ExtensionBundle,
    canonical_rep,
    injective_hull,
    is_auslander,
    projective_cover,
    slope,
    stability,
)


def format_fraction(value):
    return f"{value.numerator}/{value.denominator}"


class ExtensionBundleInputSerializer(serializers.Serializer):
    """Validates a bundle given as weights, interior and optional twist."""

    weights = WeightTripleField()
    interior = serializers.CharField()
    twist = serializers.CharField(required=False, default='0')

    def validate(self, data):
        weights = data['weights']
        field_errors = {}
        parsed = {}
        for name in ('interior', 'twist'):
            try:
                parsed[name] = parse_element(weights, data[name])
            except ElementSyntaxError as exc:
                field_errors[name] = [str(exc)]
        if field_errors:
            raise serializers.ValidationError(field_errors)
        try:
            data['bundle'] = ExtensionBundle(parsed['twist'], parsed['interior'])
        except InvalidInteriorError as exc:
            raise serializers.ValidationError({'interior': [str(exc)]})
        return data


class ExtensionBundleSerializer(serializers.Serializer):
    bundle = serializers.SerializerMethodField()
    twist = serializers.SerializerMethodField()
    interior = serializers.SerializerMethodField()
    rank = serializers.IntegerField()
    degree = serializers.IntegerField()
    determinant = serializers.SerializerMethodField()
    auslander = serializers.SerializerMethodField()
    canonical_rep = serializers.SerializerMethodField()
    slope = serializers.SerializerMethodField()
    stability = serializers.SerializerMethodField()
    cover = serializers.SerializerMethodField()
    hull = serializers.SerializerMethodField()
    k0_class = serializers.SerializerMethodField()

    def get_bundle(self, obj):
        return str(obj)

    def get_twist(self, obj):
        return str(obj.twist)

    def get_interior(self, obj):
        return str(obj.interior)

    def get_determinant(self, obj):
        return str(obj.determinant)

    def get_auslander(self, obj):
        return is_auslander(obj)

    def get_canonical_rep(self, obj):
        return str(canonical_rep(obj))

    def get_slope(self, obj):
        return format_fraction(slope(obj))

    def get_stability(self, obj):
        return stability(obj).value

    def get_cover(self, obj):
        return projective_cover(obj).as_text()

    def get_hull(self, obj):
        return injective_hull(obj).as_text()

    def get_k0_class(self, obj):
        return K0ClassSerializer(extension_bundle_class(obj)).data

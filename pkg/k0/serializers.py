# k0/serializers.py

from rest_framework import serializers

from .grothendieck import degree, determinant, rank


class K0ClassSerializer(serializers.Serializer):
    basis = serializers.SerializerMethodField()
    coeffs = serializers.SerializerMethodField()

    def get_basis(self, obj):
        return obj.basis.labels

    def get_coeffs(self, obj):
        return list(obj.coeffs)


class K0ReportSerializer(K0ClassSerializer):
    """A class together with its rank, degree and determinant."""

    rank = serializers.SerializerMethodField()
    degree = serializers.SerializerMethodField()
    determinant = serializers.SerializerMethodField()

    def get_rank(self, obj):
        return rank(obj)

    def get_degree(self, obj):
        return degree(obj)

    def get_determinant(self, obj):
        return str(determinant(obj))

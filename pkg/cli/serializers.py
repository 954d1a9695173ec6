# cli/serializers.py

from rest_framework import serializers

from lgroup.serializers import LElementField, WeightTripleField


class WeightsInputSerializer(serializers.Serializer):
    weights = WeightTripleField()


class ElementsInputSerializer(serializers.Serializer):
    """Element arguments; parsing needs ``context['weights']``."""

    elements = serializers.ListField(child=LElementField(), allow_empty=False)


class MaxWeightInputSerializer(serializers.Serializer):
    max_weight = serializers.IntegerField(min_value=2)


class SuiteResultSerializer(serializers.Serializer):
    name = serializers.CharField()
    passed = serializers.BooleanField()
    checked = serializers.IntegerField()
    failures = serializers.ListField(child=serializers.CharField())


class SelftestReportSerializer(serializers.Serializer):
    max_weight = serializers.IntegerField()
    triples = serializers.IntegerField()
    passed = serializers.BooleanField()
    suites = SuiteResultSerializer(many=True)

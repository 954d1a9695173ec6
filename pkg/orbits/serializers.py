# orbits/serializers.py

from rest_framework import serializers

from lgroup.serializers import WeightTripleField


class OrbitCountSerializer(serializers.Serializer):
    """
    Renders a dict with keys weights, formula, partition and (for Picard
    orbits) burnside.  Blocks are included when ``context['list']`` is set.
    """

    weights = WeightTripleField()
    count = serializers.SerializerMethodField()
    method = serializers.SerializerMethodField()
    fixed_counts = serializers.SerializerMethodField()
    agree = serializers.SerializerMethodField()
    blocks = serializers.SerializerMethodField()

    def get_count(self, obj):
        return obj['partition'].count

    def get_method(self, obj):
        method = {'formula': obj['formula']}
        if 'burnside' in obj:
            method['burnside'] = obj['burnside']
        method['brute'] = obj['partition'].count
        return method

    def get_fixed_counts(self, obj):
        return list(obj['partition'].fixed_counts)

    def get_agree(self, obj):
        return len(set(self.get_method(obj).values())) == 1

    def get_blocks(self, obj):
        partition = obj['partition']
        return [[self.render_member(member) for member in partition.members(block)] for block in partition.blocks]

    def render_member(self, member):
        if isinstance(member, tuple):
            return [str(part) for part in member]
        return str(member)

    def to_representation(self, instance):
        data = super().to_representation(instance)
        if not self.context.get('list'):
            data.pop('blocks')
        return data

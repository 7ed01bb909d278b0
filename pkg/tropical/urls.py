from django.urls import path

from . import views

urlpatterns = [
    path('intersect/', views.IntersectAPIView.as_view(), name="intersect"),
    path('self-intersect/', views.SelfIntersectAPIView.as_view(), name="self-intersect"),
    path('degree/', views.DegreeAPIView.as_view(), name="degree"),
    path('adjunction/', views.AdjunctionAPIView.as_view(), name="adjunction"),
    path('hessian/', views.HessianAPIView.as_view(), name="hessian"),
    path('rh/', views.RHAPIView.as_view(), name="rh"),
    path('classify/', views.ClassifyAPIView.as_view(), name="classify"),
    path('surface-scan/', views.SurfaceScanAPIView.as_view(), name="surface-scan"),
    path('surface-subdivide/', views.SurfaceSubdivideAPIView.as_view(), name="surface-subdivide"),
]
